#include "wreathstat_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "wreathstat/wreathstat.hpp"

namespace wreathstat::cli {
namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { json, csv, text };

Format parse_format(const std::string& s, bool allow_csv) {
  if (s == "json") return Format::json;
  if (s == "text") return Format::text;
  if (s == "csv" && allow_csv) return Format::csv;
  throw UsageError("unsupported format '" + s + "'");
}

Json expanded(const PositionMultiset& m) { return m.expanded(); }

Json multiset_pairs(const PositionMultiset& m) {
  Json a = Json::array();
  for (const auto& [pos, mult] : m.entries()) a.push_back({pos, mult});
  return a;
}

std::string tuple_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// Generic text rendering: one "key: value" line per top-level field.
void print_text(const Json& j, std::ostream& out) {
  for (const auto& [k, v] : j.items()) {
    out << k << ": ";
    if (v.is_string())
      out << v.get<std::string>();
    else
      out << v.dump();
    out << '\n';
  }
}

ColoredPermutation parse_element(const std::string& text, int r, std::optional<int> n) {
  try {
    return n ? parse_window(text, GroupSpec(r, *n)) : parse_window(text, r);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// ------------------------------------------------------------------ stats

Json stats_json(const ColoredPermutation& g, OrderFlavor order) {
  const int r = g.r();
  const int n = g.size();
  if (requires_signed(order) && r != 2) throw UsageError("order " + std::string(to_string(order)) + " needs r = 2");
  if (order == OrderFlavor::naturalD && (!is_in_D(g) || n < 2))
    throw UsageError("order naturalD needs an element of D_n with n >= 2");

  Json j;
  j["r"] = r;
  j["n"] = n;
  j["element"] = format_window(g);
  j["order"] = std::string(to_string(order));
  j["inverse"] = format_window(inverse(g));
  auto f = decompose(g, order == OrderFlavor::naturalD ? OrderFlavor::natural : order);
  j["factorization"] = {{"increasing", format_window(f.increasing)}, {"plain", f.plain.letters()}};
  j["negSet"] = neg_set(g);
  j["neg"] = neg(g);
  j["col"] = col(g);
  j["desA"] = type_a_descents(g, order);
  j["majorA"] = type_a_major(g, order);
  j["desSet"] = descent_set(g, OrderFlavor::wreath);
  j["des"] = des(g);
  j["stdesSet"] = descent_set(g, OrderFlavor::steingrimsson);
  j["stdes"] = stdes(g);
  j["nnegInverse"] = multiset_pairs(nneg_multiset(inverse(g)));
  j["ndesMultiset"] = expanded(ndes_multiset(g));
  j["ndes"] = ndes(g);
  j["nmajor"] = nmajor(g);
  auto cc = color_changes(g);
  j["colorChanges"] = cc.a;
  j["ch"] = cc.ch();
  j["chCeil"] = cc.ch_ceil();
  j["colorChangeDescents"] = color_change_descents(g.colors(), r);
  j["fdes"] = fdes(g);
  j["fmajor"] = fmajor(g);
  Json causes = Json::array();
  for (auto c : classify_descents(g)) causes.push_back(std::string(to_string(c)));
  j["descentCauses"] = causes;
  if (r == 2) {
    j["natdesSet"] = descent_set(g, OrderFlavor::natural);
    j["natdes"] = natdes(g);
    j["natmaj"] = natmaj(g);
    j["natfmaj"] = natfmaj(g);
    if (n >= 2 && is_in_D(g)) {
      j["dnatdesSet"] = descent_set(g, OrderFlavor::naturalD);
      j["dnatdes"] = dnatdes(g);
      j["dndesMultiset"] = expanded(dndes_multiset(g));
      j["dndes"] = dndes(g);
      j["dnmajor"] = dnmajor(g);
    }
  }
  return j;
}

// ----------------------------------------------------------------- verify

Json report_json(const IdentityReport& rep, const RhsOptions& opts, bool timing) {
  Json j;
  j["id"] = std::string(to_string(rep.id));
  j["r"] = rep.spec.r();
  j["n"] = rep.spec.n();
  j["K"] = rep.K;
  if (opts.variant) j["variant"] = std::string(to_string(*opts.variant));
  if (opts.mutate_statistic) j["mutate"] = *opts.mutate_statistic;
  j["match"] = rep.match;
  if (rep.mismatch)
    j["firstMismatch"] = {{"monomial", rep.mismatch->monomial.to_string()},
                          {"lhs", rep.mismatch->lhs.get_str()},
                          {"rhs", rep.mismatch->rhs.get_str()}};
  if (timing) j["elapsedMs"] = rep.elapsed.count();
  return j;
}

DescentVariant parse_variant(const std::string& s) {
  for (auto v : {DescentVariant::wreath, DescentVariant::steingrimsson, DescentVariant::natural})
    if (to_string(v) == s) return v;
  throw UsageError("unknown variant '" + s + "' (expected des, stdes or natdes)");
}

IdentityId parse_identity(const std::string& s) {
  try {
    return identity_from_string(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

unsigned worker_count() {
  if (const char* env = std::getenv("WREATHSTAT_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
    throw UsageError("WREATHSTAT_WORKERS must be a positive integer");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

struct Job {
  IdentityId id;
  GridPoint point;
};

// Workers fill result slots; the caller prints them in job order.
std::vector<IdentityReport> run_jobs(const std::vector<Job>& jobs, const RhsOptions& opts) {
  std::vector<IdentityReport> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      try {
        results[i] = verify(jobs[i].id, jobs[i].point.spec, jobs[i].point.K, opts);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(jobs.size(), 1));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

// ----------------------------------------------------------- distribution

Json distribution_json(GroupSpec spec, StatPair pair, const Polynomial& p) {
  Json terms = Json::array();
  mpz_class total = 0;
  for (const auto& [m, c] : p.terms()) {
    terms.push_back({{"t", m.exponent(VarId::t())}, {"q", m.exponent(VarId::q())}, {"coefficient", c.get_str()}});
    total += c;
  }
  Json j;
  j["r"] = spec.r();
  j["n"] = spec.n();
  j["pair"] = std::string(to_string(pair));
  j["polynomial"] = p.to_string();
  j["total"] = total.get_str();
  j["terms"] = terms;
  return j;
}

void distribution_csv(const Polynomial& p, std::ostream& out) {
  int max_t = 0, max_q = 0;
  std::map<std::pair<int, int>, mpz_class> cells;
  for (const auto& [m, c] : p.terms()) {
    int a = m.exponent(VarId::t()), b = m.exponent(VarId::q());
    max_t = std::max(max_t, a);
    max_q = std::max(max_q, b);
    cells[{a, b}] = c;
  }
  out << "t\\q";
  for (int b = 0; b <= max_q; ++b) out << ',' << b;
  out << '\n';
  for (int a = 0; a <= max_t; ++a) {
    out << a;
    for (int b = 0; b <= max_q; ++b) {
      auto it = cells.find({a, b});
      out << ',' << (it == cells.end() ? std::string("0") : it->second.get_str());
    }
    out << '\n';
  }
}

// -------------------------------------------------------------- bijection

Json side_json(const ColoredPermutation& g) {
  return {{"element", format_window(g)}, {"ndes", ndes(g)}, {"nmajor", nmajor(g)}, {"fdes", fdes(g)},
          {"fmajor", fmajor(g)}};
}

// ------------------------------------------------------------------- cone

std::vector<long long> scaling_for(const std::string& name, int n, int r) {
  if (name == "unit") return unit_scaling(n);
  if (name == "wreath") return wreath_scaling(n, r);
  if (name == "typeD") return type_d_scaling(n);
  throw UsageError("unknown scaling '" + name + "' (expected unit, wreath or typeD)");
}

Json cone_json(const SimplicialCone& c, ShiftMethod method) {
  Json j;
  j["simplex"] = c.source()->label();
  j["inequalities"] = c.source()->describe();
  j["generators"] = c.generators();
  j["open"] = c.open();
  j["determinant"] = determinant(c).get_str();
  j["closedPoints"] = closed_fpp_points_hnf(c);
  j["points"] = fpp_points(c, method);
  j["sigma"] = sigma_rational(c, method).to_string();
  return j;
}

void cone_text(const Json& j, std::ostream& out) {
  out << "simplex " << j["simplex"].get<std::string>() << ": " << j["inequalities"].get<std::string>() << '\n';
  for (const auto& g : j["generators"]) out << "generator " << tuple_string(g.get<IntVector>()) << '\n';
  out << "determinant " << j["determinant"].get<std::string>() << '\n';
  for (const auto& p : j["points"]) out << "point " << tuple_string(p.get<IntVector>()) << '\n';
}

// ----------------------------------------------------------------- locate

std::vector<mpq_class> parse_point(const std::string& text) {
  std::vector<mpq_class> x;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char ch) { return std::isspace(ch); }), tok.end());
    auto slash = tok.find('/');
    auto is_int = [](const std::string& s, bool allow_sign) {
      std::size_t i = (allow_sign && !s.empty() && s[0] == '-') ? 1 : 0;
      return i < s.size() && std::all_of(s.begin() + static_cast<long>(i), s.end(),
                                         [](unsigned char ch) { return std::isdigit(ch); });
    };
    std::string num = tok.substr(0, slash), den = slash == std::string::npos ? "1" : tok.substr(slash + 1);
    if (!is_int(num, true) || !is_int(den, false)) throw UsageError("bad rational token '" + tok + "' (expected p/q)");
    mpz_class d(den);
    if (d == 0) throw UsageError("zero denominator in '" + tok + "'");
    mpq_class v(mpz_class(num), d);
    v.canonicalize();
    x.push_back(v);
  }
  if (x.empty()) throw UsageError("empty point");
  return x;
}

void emit(const Json& j, Format fmt, std::ostream& out) {
  if (fmt == Format::json)
    out << j.dump(2) << '\n';
  else
    print_text(j, out);
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Statistics and generating-function identities on colored permutation groups", "wreathstat"};
  app.require_subcommand(1);

  std::string format = "json";
  int r = 1;
  std::optional<int> n;
  std::string element;
  std::string order = "wreath";

  auto* stats = app.add_subcommand("stats", "Print every applicable statistic of one element");
  stats->add_option("--r", r, "Number of colors")->check(CLI::PositiveNumber);
  stats->add_option("--n", n, "Number of letters (inferred from the element when omitted)")->check(CLI::PositiveNumber);
  stats->add_option("--element", element, "Window, e.g. \"[1^3 4^0 2^1]\"")->required();
  stats->add_option("--order", order, "Letter order for desA/majorA and the factorization")
      ->check(CLI::IsMember({"wreath", "steingrimsson", "natural", "naturalD"}));
  stats->add_option("--format", format, "json or text");

  std::string id;
  std::optional<int> vr, vn;
  int K = 3;
  bool grid = false, timing = false;
  std::optional<std::string> variant;
  std::optional<int> mutate;
  std::uint64_t budget = kDefaultBudget;
  auto* ver = app.add_subcommand("verify", "Compare both sides of an identity up to total degree K");
  ver->add_option("--id", id, "Identity id, or 'all' together with --grid")->required();
  auto* opt_r = ver->add_option("--r", vr, "Number of colors")->check(CLI::PositiveNumber);
  auto* opt_n = ver->add_option("--n", vn, "Number of letters")->check(CLI::PositiveNumber);
  auto* opt_k = ver->add_option("--K", K, "Truncation degree")->check(CLI::NonNegativeNumber);
  ver->add_flag("--grid", grid, "Run the identity's full acceptance grid")->excludes(opt_r, opt_n, opt_k);
  ver->add_option("--variant", variant, "wreathEulerian descent statistic: des, stdes or natdes");
  ver->add_option("--mutate", mutate, "Bump one RHS statistic by +1 (0, 1 or 2)")->check(CLI::Range(0, 2));
  ver->add_option("--budget", budget, "Maximum group size to enumerate");
  ver->add_flag("--timing", timing, "Include elapsedMs in each report");
  ver->add_option("--format", format, "json or text");

  std::string pair;
  auto* dist = app.add_subcommand("distribution", "Joint distribution of a statistic pair");
  dist->add_option("--r", r, "Number of colors")->check(CLI::PositiveNumber);
  dist->add_option("--n", n, "Number of letters")->required()->check(CLI::PositiveNumber);
  dist->add_option("--pair", pair, "Statistic pair, e.g. ndes-nmajor")->required();
  dist->add_option("--budget", budget, "Maximum group size to enumerate");
  dist->add_option("--format", format, "json, csv or text");

  bool inverse_dir = false;
  auto* bij = app.add_subcommand("bijection", "Apply the bijection sending (ndes, nmajor) to (fdes, fmajor)");
  bij->add_option("--r", r, "Number of colors")->check(CLI::PositiveNumber);
  bij->add_option("--n", n, "Number of letters")->check(CLI::PositiveNumber);
  bij->add_option("--element", element, "Window of the element")->required();
  bij->add_flag("--inverse", inverse_dir, "Apply the inverse map instead");
  bij->add_option("--format", format, "json or text");

  std::string perm, scaling = "unit", method = "whole";
  int box = 1;
  bool signed_cube = false;
  auto* cone = app.add_subcommand("cone", "Generators, determinant and parallelepiped points of cones over simplices");
  cone->add_option("--n", n, "Dimension")->required()->check(CLI::PositiveNumber);
  cone->add_option("--r", r, "Color count used by the wreath scaling")->check(CLI::PositiveNumber);
  cone->add_option("--perm", perm, "Simplex permutation (or signed window with --signed); all simplices when omitted");
  cone->add_option("--box", box, "Side length of the cube holding the simplex")->check(CLI::PositiveNumber);
  cone->add_flag("--signed", signed_cube, "Use the signed triangulation of [-1,1]^n");
  cone->add_option("--scaling", scaling, "unit, wreath or typeD");
  cone->add_option("--method", method, "Shifting method: whole or offBoundary")
      ->check(CLI::IsMember({"whole", "offBoundary"}));
  cone->add_option("--format", format, "json or text");

  std::string point;
  auto* loc = app.add_subcommand("locate", "Find the simplex of [0,r]^n holding a rational point");
  loc->add_option("--n", n, "Dimension")->required()->check(CLI::PositiveNumber);
  loc->add_option("--r", r, "Cube side")->check(CLI::PositiveNumber);
  loc->add_option("--point", point, "Comma-separated p/q coordinates")->required();
  loc->add_option("--format", format, "json or text");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*stats) {
      Format fmt = parse_format(format, false);
      OrderFlavor flavor = order_flavor_from_string(order);
      emit(stats_json(parse_element(element, r, n), flavor), fmt, out);
      return kOk;
    }

    if (*ver) {
      Format fmt = parse_format(format, false);
      RhsOptions opts;
      opts.budget = budget;
      opts.mutate_statistic = mutate;
      if (variant) opts.variant = parse_variant(*variant);
      std::vector<Job> jobs;
      if (grid) {
        std::vector<IdentityId> ids = id == "all" ? all_identities() : std::vector<IdentityId>{parse_identity(id)};
        for (auto i : ids)
          for (const auto& p : acceptance_grid(i)) jobs.push_back({i, p});
      } else {
        IdentityId iid = parse_identity(id);
        if (!vn) throw UsageError("verify needs --n (or --grid)");
        int rr = 0;
        if (vr) {
          rr = *vr;
        } else {
          auto g = acceptance_grid(iid);
          rr = g.front().spec.r();
          for (const auto& p : g)
            if (p.spec.r() != rr) throw UsageError(std::string(to_string(iid)) + " needs --r");
        }
        jobs.push_back({iid, {GroupSpec(rr, *vn), K}});
      }
      for (const auto& j : jobs) {
        try {
          check_parameters(j.id, j.point.spec, budget);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      }
      auto reports = run_jobs(jobs, opts);
      bool all_match = std::all_of(reports.begin(), reports.end(), [](const auto& rep) { return rep.match; });
      if (fmt == Format::json) {
        if (grid) {
          Json arr = Json::array();
          for (const auto& rep : reports) arr.push_back(report_json(rep, opts, timing));
          out << arr.dump(2) << '\n';
        } else {
          out << report_json(reports.front(), opts, timing).dump(2) << '\n';
        }
      } else {
        for (const auto& rep : reports) {
          out << to_string(rep.id) << " r=" << rep.spec.r() << " n=" << rep.spec.n() << " K=" << rep.K << ' '
              << (rep.match ? "match" : "MISMATCH");
          if (rep.mismatch)
            out << " at " << rep.mismatch->monomial.to_string() << " lhs=" << rep.mismatch->lhs.get_str()
                << " rhs=" << rep.mismatch->rhs.get_str();
          if (timing) out << " " << rep.elapsed.count() << "ms";
          out << '\n';
        }
      }
      return all_match ? kOk : kMismatch;
    }

    if (*dist) {
      Format fmt = parse_format(format, true);
      StatPair sp;
      try {
        sp = stat_pair_from_string(pair);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      GroupSpec spec(r, *n);
      Polynomial p = distribution(spec, sp, budget);
      if (fmt == Format::csv)
        distribution_csv(p, out);
      else if (fmt == Format::text)
        out << p.to_string() << '\n';
      else
        out << distribution_json(spec, sp, p).dump(2) << '\n';
      return kOk;
    }

    if (*bij) {
      Format fmt = parse_format(format, false);
      auto g = parse_element(element, r, n);
      auto h = inverse_dir ? flag_neg_bijection(g) : neg_flag_bijection(g);
      Json j;
      j["r"] = g.r();
      j["n"] = g.size();
      j["direction"] = inverse_dir ? "inverse" : "forward";
      j["source"] = side_json(g);
      j["image"] = side_json(h);
      emit(j, fmt, out);
      return kOk;
    }

    if (*cone) {
      Format fmt = parse_format(format, false);
      ShiftMethod sm = method == "whole" ? ShiftMethod::whole : ShiftMethod::offBoundary;
      auto sc = scaling_for(scaling, *n, r);
      std::vector<HalfOpenSimplex> simplices;
      if (signed_cube) {
        if (perm.empty())
          simplices = triangulate_signed_cube(*n);
        else
          simplices.push_back(HalfOpenSimplex::signed_simplex(parse_element(perm, 2, n)));
      } else if (perm.empty()) {
        simplices = triangulate_cube(*n, box);
      } else {
        auto g = parse_element(perm, 1, n);
        auto letters = g.letters();
        simplices.push_back(HalfOpenSimplex::unsigned_simplex(letters, box));
      }
      Json cones = Json::array();
      for (const auto& s : simplices) cones.push_back(cone_json(cone_over(s, sc), sm));
      if (fmt == Format::json) {
        Json j;
        j["n"] = *n;
        j["scaling"] = scaling;
        j["method"] = method;
        j["cones"] = cones;
        out << j.dump(2) << '\n';
      } else {
        for (const auto& c : cones) cone_text(c, out);
      }
      return kOk;
    }

    if (*loc) {
      Format fmt = parse_format(format, false);
      auto x = parse_point(point);
      LocateResult res = [&] {
        try {
          return locate(x, *n, r);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      }();
      if (fmt == Format::text) {
        Json p = res.pi;
        out << p.dump() << '\n';
        return kOk;
      }
      Json j;
      j["n"] = *n;
      j["r"] = r;
      Json pt = Json::array();
      for (const auto& v : x) pt.push_back(v.get_str());
      j["point"] = pt;
      j["permutation"] = res.pi;
      j["inequalities"] = res.simplex.describe();
      out << j.dump(2) << '\n';
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace wreathstat::cli
