#include "wreathstat/identities.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "wreathstat/polyhedral.hpp"
#include "wreathstat/statistics.hpp"

namespace wreathstat {

namespace {

struct IdentityInfo {
  IdentityId id;
  std::string_view name;
  LhsKind lhs;
  bool multivariate;
  int statistics;
};

constexpr std::array<IdentityInfo, 17> kIdentities{{
    {IdentityId::eulerianA, "eulerianA", LhsKind::powerRK, false, 1},
    {IdentityId::carlitz, "carlitz", LhsKind::qPower, false, 2},
    {IdentityId::multivariateA, "multivariateA", LhsKind::productK1, true, 2},
    {IdentityId::wreathEulerian, "wreathEulerian", LhsKind::powerRK, false, 1},
    {IdentityId::wreathNeg, "wreathNeg", LhsKind::qPower, false, 2},
    {IdentityId::wreathFlag, "wreathFlag", LhsKind::qPower, false, 2},
    {IdentityId::wreathNegMulti, "wreathNegMulti", LhsKind::productK1, true, 2},
    {IdentityId::wreathFlagMulti, "wreathFlagMulti", LhsKind::productK1, true, 2},
    {IdentityId::wreathFlagRk, "wreathFlagRk", LhsKind::qPowerRK, false, 2},
    {IdentityId::wreathFlagRkMulti, "wreathFlagRkMulti", LhsKind::productRK1, true, 2},
    {IdentityId::chowGessel, "chowGessel", LhsKind::signedQ, false, 3},
    {IdentityId::chowGesselFlag, "chowGesselFlag", LhsKind::q2k1, false, 2},
    {IdentityId::bNaturalMulti, "bNaturalMulti", LhsKind::signedMulti, true, 3},
    {IdentityId::bFlagMulti, "bFlagMulti", LhsKind::productRK1, true, 2},
    {IdentityId::dEulerian, "dEulerian", LhsKind::typeD, false, 1},
    {IdentityId::dNeg, "dNeg", LhsKind::qPower, false, 2},
    {IdentityId::dNegMulti, "dNegMulti", LhsKind::productK1, true, 2},
}};

const IdentityInfo& info(IdentityId id) {
  for (const auto& i : kIdentities)
    if (i.id == id) return i;
  throw std::invalid_argument("unknown identity");
}

enum class Family { typeA, wreath, typeB, typeD };

Family family_of(IdentityId id) {
  switch (id) {
    case IdentityId::eulerianA:
    case IdentityId::carlitz:
    case IdentityId::multivariateA: return Family::typeA;
    case IdentityId::chowGessel:
    case IdentityId::chowGesselFlag:
    case IdentityId::bNaturalMulti:
    case IdentityId::bFlagMulti: return Family::typeB;
    case IdentityId::dEulerian:
    case IdentityId::dNeg:
    case IdentityId::dNegMulti: return Family::typeD;
    default: return Family::wreath;
  }
}

// Terms keyed by their (sorted) denominator factors.
class TermCollector {
 public:
  void add(std::vector<Monomial> denominator, const Monomial& numerator) {
    std::sort(denominator.begin(), denominator.end());
    terms_[std::move(denominator)].add_term(numerator, 1);
  }

  std::vector<RationalExpr> finish(const std::optional<Monomial>& bump) && {
    std::vector<RationalExpr> out;
    for (auto& [den, num] : terms_) {
      if (num.is_zero()) continue;
      RationalExpr e;
      e.numerator = bump ? num.times(*bump) : std::move(num);
      e.denominator = den;
      out.push_back(std::move(e));
    }
    return out;
  }

 private:
  std::map<std::vector<Monomial>, Polynomial> terms_;
};

Monomial t_pow(int e) { return Monomial::var(VarId::t(), e); }
Monomial q_pow(int e) { return Monomial::var(VarId::q(), e); }
Monomial z0_pow(int e) { return Monomial::var(VarId::z(0), e); }

// u_j = z_pi(1) ... z_pi(j), j = 0..n
std::vector<Monomial> prefix_products(std::span<const int> pi) {
  std::vector<Monomial> u(pi.size() + 1);
  for (std::size_t j = 1; j <= pi.size(); ++j) u[j] = u[j - 1] * Monomial::var(VarId::z(pi[j - 1]));
  return u;
}

std::vector<bool> descent_mask(std::span<const int> pi) {
  std::vector<bool> mask(pi.size() + 1, false);
  for (int j : classical_descents(pi)) mask[static_cast<std::size_t>(j)] = true;
  return mask;
}

std::vector<Monomial> repeated(const Monomial& m, int times) {
  return std::vector<Monomial>(static_cast<std::size_t>(times), m);
}

std::optional<Monomial> mutation_monomial(IdentityId id, const RhsOptions& opts) {
  if (!opts.mutate_statistic) return std::nullopt;
  int k = *opts.mutate_statistic;
  const auto& in = info(id);
  if (k < 0 || k >= in.statistics)
    throw std::invalid_argument("identity " + std::string(in.name) + " has no statistic #" + std::to_string(k));
  switch (k) {
    case 0: return Monomial::var(in.multivariate ? VarId::z(0) : VarId::t());
    case 1: return Monomial::var(in.multivariate ? VarId::z(1) : VarId::q());
    default: return Monomial::var(VarId::s());
  }
}

int descent_statistic(const ColoredPermutation& g, DescentVariant v) {
  switch (v) {
    case DescentVariant::wreath: return des(g);
    case DescentVariant::steingrimsson: return stdes(g);
    case DescentVariant::natural: return natdes(g);
  }
  return 0;
}

// Sum over pi in S_n and increasing rho (wreath order) of a term built from g = rho o pi.
template <typename F>
void for_each_coset_element(GroupSpec spec, bool even_only, F&& visit) {
  auto increasing = enumerate_increasing(spec, OrderFlavor::wreath, even_only);
  for (const auto& pi : all_permutations(spec.n())) {
    auto plain = ColoredPermutation::from_plain(spec, pi);
    for (const auto& rho : increasing) visit(compose(rho, plain));
  }
}

}  // namespace

std::string_view to_string(IdentityId id) { return info(id).name; }

IdentityId identity_from_string(std::string_view s) {
  for (const auto& i : kIdentities)
    if (i.name == s) return i.id;
  throw std::invalid_argument("unknown identity '" + std::string(s) + "'");
}

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = [] {
    std::vector<IdentityId> v;
    for (const auto& i : kIdentities) v.push_back(i.id);
    return v;
  }();
  return ids;
}

LhsKind lhs_of(IdentityId id) { return info(id).lhs; }

std::string_view to_string(DescentVariant v) {
  switch (v) {
    case DescentVariant::wreath: return "des";
    case DescentVariant::steingrimsson: return "stdes";
    case DescentVariant::natural: return "natdes";
  }
  return "?";
}

int mutable_statistics(IdentityId id) { return info(id).statistics; }

void check_parameters(IdentityId id, GroupSpec spec, std::uint64_t budget) {
  const std::string name(to_string(id));
  switch (family_of(id)) {
    case Family::typeA:
      if (spec.r() != 1) throw std::invalid_argument(name + " is a type A identity and needs r = 1");
      break;
    case Family::typeB:
      if (spec.r() != 2) throw std::invalid_argument(name + " is a type B identity and needs r = 2");
      break;
    case Family::typeD:
      if (spec.r() != 2) throw std::invalid_argument(name + " is a type D identity and needs r = 2");
      if (spec.n() < 2) throw std::invalid_argument(name + " needs n >= 2");
      break;
    case Family::wreath: break;
  }
  auto order = spec.order();
  if (!order) throw BudgetExceeded(~std::uint64_t{0}, budget);
  if (*order > budget) throw BudgetExceeded(*order, budget);
}

std::vector<RationalExpr> rhs_terms(IdentityId id, GroupSpec spec, const RhsOptions& opts) {
  check_parameters(id, spec, opts.budget);
  const int n = spec.n();
  const int r = spec.r();
  auto bump = mutation_monomial(id, opts);
  TermCollector terms;

  const Monomial t = t_pow(1);
  const Monomial z0 = z0_pow(1);

  switch (id) {
    case IdentityId::eulerianA:
    case IdentityId::wreathEulerian: {
      DescentVariant v = opts.variant.value_or(DescentVariant::wreath);
      if (v == DescentVariant::natural && r != 2)
        throw std::invalid_argument("the natdes variant needs r = 2");
      for_each_element(spec, [&](const ColoredPermutation& g) {
        terms.add(repeated(t, n + 1), t_pow(descent_statistic(g, v)));
      });
      break;
    }
    case IdentityId::carlitz: {
      std::vector<Monomial> den;
      for (int j = 0; j <= n; ++j) den.push_back(t * q_pow(j));
      for (const auto& pi : all_permutations(n))
        terms.add(den, t_pow(classical_des(pi)) * q_pow(classical_maj(pi)));
      break;
    }
    case IdentityId::multivariateA: {
      for (const auto& pi : all_permutations(n)) {
        auto u = prefix_products(pi);
        std::vector<Monomial> den;
        for (int j = 0; j <= n; ++j) den.push_back(z0 * u[static_cast<std::size_t>(j)]);
        Monomial num;
        for (int j : classical_descents(pi)) num *= z0 * u[static_cast<std::size_t>(j)];
        terms.add(den, num);
      }
      break;
    }
    case IdentityId::wreathNeg:
    case IdentityId::wreathFlag: {
      std::vector<Monomial> den{t};
      for (int j = 1; j <= n; ++j) den.push_back(t_pow(r) * q_pow(r * j));
      const bool neg_stats = id == IdentityId::wreathNeg;
      for_each_element(spec, [&](const ColoredPermutation& g) {
        terms.add(den, neg_stats ? t_pow(ndes(g)) * q_pow(nmajor(g)) : t_pow(fdes(g)) * q_pow(fmajor(g)));
      });
      break;
    }
    case IdentityId::wreathFlagRk: {
      std::vector<Monomial> den;
      for (int j = 0; j <= n; ++j) den.push_back(t * q_pow(r * j));
      for_each_element(spec, [&](const ColoredPermutation& g) { terms.add(den, t_pow(des(g)) * q_pow(fmajor(g))); });
      break;
    }
    case IdentityId::wreathNegMulti:
    case IdentityId::dNegMulti: {
      const bool type_d = id == IdentityId::dNegMulti;
      for_each_coset_element(spec, type_d, [&](const ColoredPermutation& g) {
        auto plain = decompose(g).plain.letters();
        auto u = prefix_products(plain);
        std::vector<Monomial> den{z0};
        Monomial num;
        for (int j : classical_descents(plain)) num *= z0 * u[static_cast<std::size_t>(j)];
        if (type_d) {
          for (int j = 1; j < n; ++j) den.push_back((z0 * u[static_cast<std::size_t>(j)]).pow(2));
          den.push_back(z0 * u[static_cast<std::size_t>(n)]);
          for (int j : neg_set(inverse(g)))
            if (j != 1) num *= z0 * u[static_cast<std::size_t>(j - 1)];
        } else {
          for (int j = 1; j <= n; ++j) den.push_back((z0 * u[static_cast<std::size_t>(j)]).pow(r));
          auto nneg = nneg_multiset(inverse(g));
          for (const auto& [pos, mult] : nneg.entries())
            num *= (z0 * u[static_cast<std::size_t>(pos)]).pow(mult);
        }
        terms.add(std::move(den), num);
      });
      break;
    }
    case IdentityId::wreathFlagMulti: {
      for_each_element(spec, [&](const ColoredPermutation& g) {
        auto pi = g.letters();
        auto u = prefix_products(pi);
        auto des_mask = descent_mask(pi);
        auto a = color_changes(g).a;
        std::vector<Monomial> den{z0};
        Monomial num;
        for (int j = 1; j <= n; ++j) {
          Monomial v = z0 * u[static_cast<std::size_t>(j)];
          den.push_back(v.pow(r));
          int aj = a[static_cast<std::size_t>(j - 1)];
          num *= v.pow(aj);
          if (aj == 0 && des_mask[static_cast<std::size_t>(j)]) num *= v.pow(r);
        }
        terms.add(std::move(den), num);
      });
      break;
    }
    case IdentityId::wreathFlagRkMulti:
    case IdentityId::bFlagMulti: {
      for_each_element(spec, [&](const ColoredPermutation& g) {
        auto pi = g.letters();
        auto u = prefix_products(pi);
        auto des_mask = descent_mask(pi);
        auto cc = color_changes(g);
        std::vector<Monomial> den;
        for (int j = 0; j <= n; ++j) den.push_back(z0 * u[static_cast<std::size_t>(j)].pow(r));
        Monomial num = z0_pow(cc.ch_ceil());
        for (int j = 1; j <= n; ++j) {
          int aj = cc.a[static_cast<std::size_t>(j - 1)];
          num *= u[static_cast<std::size_t>(j)].pow(aj);
          if (aj == 0 && des_mask[static_cast<std::size_t>(j)]) num *= z0 * u[static_cast<std::size_t>(j)].pow(r);
        }
        terms.add(std::move(den), num);
      });
      break;
    }
    case IdentityId::chowGessel:
    case IdentityId::chowGesselFlag: {
      const bool flag = id == IdentityId::chowGesselFlag;
      std::vector<Monomial> den;
      for (int j = 0; j <= n; ++j) den.push_back(t * q_pow(flag ? 2 * j : j));
      const Monomial s = Monomial::var(VarId::s());
      for_each_element(spec, [&](const ColoredPermutation& g) {
        if (flag)
          terms.add(den, t_pow(natdes(g)) * q_pow(natfmaj(g)));
        else
          terms.add(den, s.pow(neg(g)) * t_pow(natdes(g)) * q_pow(natmaj(g)));
      });
      break;
    }
    case IdentityId::bNaturalMulti: {
      const Monomial s = Monomial::var(VarId::s());
      for_each_element(spec, [&](const ColoredPermutation& g) {
        // gen[j] = z0 * prod_{i>j} (z_pi(i) or w_pi(i))
        std::vector<Monomial> gen(static_cast<std::size_t>(n) + 1);
        Monomial tail;
        for (int j = n; j >= 0; --j) {
          gen[static_cast<std::size_t>(j)] = z0 * tail;
          if (j >= 1)
            tail *= Monomial::var(g.color(j) != 0 ? VarId::w(g.letter(j)) : VarId::z(g.letter(j)));
        }
        Monomial num = s.pow(neg(g));
        for (int j : descent_set(g, OrderFlavor::natural)) num *= gen[static_cast<std::size_t>(j)];
        terms.add(gen, num);
      });
      break;
    }
    case IdentityId::dEulerian: {
      for (const auto& g : enumerate_type_d(n)) terms.add(repeated(t, n + 1), t_pow(dnatdes(g)));
      break;
    }
    case IdentityId::dNeg: {
      std::vector<Monomial> den{t, t * q_pow(n)};
      for (int j = 1; j < n; ++j) den.push_back(t_pow(2) * q_pow(2 * j));
      for (const auto& g : enumerate_type_d(n)) terms.add(den, t_pow(dndes(g)) * q_pow(dnmajor(g)));
      break;
    }
  }
  return std::move(terms).finish(bump);
}

namespace {

TruncatedSeries expand_all(const std::vector<RationalExpr>& terms, int K) {
  TruncatedSeries acc(Polynomial{}, K);
  for (const auto& e : terms) acc += expand(e, K);
  return acc;
}

}  // namespace

TruncatedSeries rhs_series(IdentityId id, GroupSpec spec, int K, const RhsOptions& opts) {
  return expand_all(rhs_terms(id, spec, opts), K);
}

bool has_polyhedral_rhs(IdentityId id) { return info(id).multivariate; }

std::vector<RationalExpr> rhs_terms_polyhedral(IdentityId id, GroupSpec spec) {
  if (!has_polyhedral_rhs(id))
    throw std::invalid_argument(std::string(to_string(id)) + " has no polyhedral construction");
  check_parameters(id, spec);
  const int n = spec.n();
  const int r = spec.r();
  std::vector<SimplicialCone> cones;
  ShiftMethod method = ShiftMethod::whole;
  switch (id) {
    case IdentityId::multivariateA:
      for (const auto& s : triangulate_cube(n, 1)) cones.push_back(cone_over(s));
      break;
    case IdentityId::wreathNegMulti:
    case IdentityId::wreathFlagMulti:
      for (const auto& s : triangulate_cube(n, 1)) cones.push_back(cone_over(s, wreath_scaling(n, r)));
      if (id == IdentityId::wreathFlagMulti) method = ShiftMethod::offBoundary;
      break;
    case IdentityId::wreathFlagRkMulti:
    case IdentityId::bFlagMulti:
      for (const auto& s : triangulate_cube(n, r)) cones.push_back(cone_over(s));
      break;
    case IdentityId::bNaturalMulti:
      for (const auto& s : triangulate_signed_cube(n)) cones.push_back(cone_over(s));
      break;
    case IdentityId::dNegMulti:
      for (const auto& s : triangulate_cube(n, 1)) cones.push_back(cone_over(s, type_d_scaling(n)));
      break;
    default: break;
  }
  std::map<std::vector<Monomial>, Polynomial> merged;
  for (const auto& c : cones) {
    auto e = sigma_rational(c, method);
    std::sort(e.denominator.begin(), e.denominator.end());
    merged[e.denominator] += e.numerator;
  }
  std::vector<RationalExpr> out;
  for (auto& [den, num] : merged) out.push_back({std::move(num), den});
  return out;
}

TruncatedSeries rhs_series_polyhedral(IdentityId id, GroupSpec spec, int K) {
  return expand_all(rhs_terms_polyhedral(id, spec), K);
}

TruncatedSeries lhs_for(IdentityId id, GroupSpec spec, int K) {
  check_parameters(id, spec, ~std::uint64_t{0});
  return lhs_series(lhs_of(id), spec.r(), spec.n(), K);
}

std::optional<Mismatch> first_mismatch(const Polynomial& lhs, const Polynomial& rhs) {
  auto a = lhs.terms().begin(), b = rhs.terms().begin();
  const auto ae = lhs.terms().end(), be = rhs.terms().end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->first < b->first)) return Mismatch{a->first, a->second, 0};
    if (a == ae || b->first < a->first) return Mismatch{b->first, 0, b->second};
    if (a->second != b->second) return Mismatch{a->first, a->second, b->second};
    ++a;
    ++b;
  }
  return std::nullopt;
}

IdentityReport verify(IdentityId id, GroupSpec spec, int K, const RhsOptions& opts) {
  if (K < 0) throw std::invalid_argument("K must be non-negative");
  auto start = std::chrono::steady_clock::now();
  check_parameters(id, spec, opts.budget);

  std::vector<RhsOptions> runs{opts};
  if (id == IdentityId::wreathEulerian && !opts.variant) {
    runs.clear();
    for (DescentVariant v : {DescentVariant::wreath, DescentVariant::steingrimsson, DescentVariant::natural}) {
      if (v == DescentVariant::natural && spec.r() != 2) continue;
      RhsOptions o = opts;
      o.variant = v;
      runs.push_back(o);
    }
  }

  IdentityReport report{id, spec, K, true, std::nullopt, {}};
  auto lhs = lhs_for(id, spec, K);
  for (const auto& o : runs) {
    auto rhs = rhs_series(id, spec, K, o);
    if (auto m = first_mismatch(lhs.poly, rhs.poly)) {
      report.match = false;
      report.mismatch = std::move(m);
      break;
    }
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

// ------------------------------------------------------------ distributions

namespace {

struct StatPairInfo {
  StatPair pair;
  std::string_view name;
};

constexpr std::array<StatPairInfo, 9> kStatPairs{{
    {StatPair::ndesNmajor, "ndes-nmajor"},
    {StatPair::fdesFmajor, "fdes-fmajor"},
    {StatPair::desFmajor, "des-fmajor"},
    {StatPair::natdesNatfmaj, "natdes-natfmaj"},
    {StatPair::stdesOnly, "stdes-only"},
    {StatPair::desOnly, "des-only"},
    {StatPair::dndesDnmajor, "dndes-dnmajor"},
    {StatPair::dnatdesOnly, "dnatdes-only"},
    {StatPair::desAMajorA, "desA-majorA"},
}};

std::pair<int, int> stat_values(const ColoredPermutation& g, StatPair p) {
  switch (p) {
    case StatPair::ndesNmajor: return {ndes(g), nmajor(g)};
    case StatPair::fdesFmajor: return {fdes(g), fmajor(g)};
    case StatPair::desFmajor: return {des(g), fmajor(g)};
    case StatPair::natdesNatfmaj: return {natdes(g), natfmaj(g)};
    case StatPair::stdesOnly: return {stdes(g), 0};
    case StatPair::desOnly: return {des(g), 0};
    case StatPair::dndesDnmajor: return {dndes(g), dnmajor(g)};
    case StatPair::dnatdesOnly: return {dnatdes(g), 0};
    case StatPair::desAMajorA:
      return {static_cast<int>(type_a_descents(g).size()), type_a_major(g)};
  }
  return {0, 0};
}

}  // namespace

std::string_view to_string(StatPair p) {
  for (const auto& i : kStatPairs)
    if (i.pair == p) return i.name;
  return "?";
}

StatPair stat_pair_from_string(std::string_view s) {
  for (const auto& i : kStatPairs)
    if (i.name == s) return i.pair;
  throw std::invalid_argument("unknown statistic pair '" + std::string(s) + "'");
}

const std::vector<StatPair>& all_stat_pairs() {
  static const std::vector<StatPair> v = [] {
    std::vector<StatPair> out;
    for (const auto& i : kStatPairs) out.push_back(i.pair);
    return out;
  }();
  return v;
}

Polynomial distribution(GroupSpec spec, StatPair pair, std::uint64_t budget) {
  const bool signed_pair = pair == StatPair::natdesNatfmaj;
  const bool type_d = pair == StatPair::dndesDnmajor || pair == StatPair::dnatdesOnly;
  if ((signed_pair || type_d) && spec.r() != 2)
    throw std::invalid_argument(std::string(to_string(pair)) + " needs r = 2");
  if (type_d && spec.n() < 2) throw std::invalid_argument(std::string(to_string(pair)) + " needs n >= 2");
  auto order = spec.order();
  if (!order || *order > budget) throw BudgetExceeded(order.value_or(~std::uint64_t{0}), budget);

  std::map<std::pair<int, int>, long long> counts;
  for_each_element(spec, [&](const ColoredPermutation& g) {
    if (type_d && !is_in_D(g)) return;
    ++counts[stat_values(g, pair)];
  });
  Polynomial p;
  for (const auto& [k, c] : counts)
    p.add_term(t_pow(k.first) * q_pow(k.second), mpz_class(static_cast<long>(c)));
  return p;
}

std::vector<GridPoint> acceptance_grid(IdentityId id) {
  std::vector<GridPoint> g;
  auto range = [&](int r, int lo, int hi, int K) {
    for (int n = lo; n <= hi; ++n) g.push_back({GroupSpec(r, n), K});
  };
  auto wreath_grid = [&] {
    range(2, 1, 4, 3);
    range(3, 1, 3, 3);
    range(4, 1, 2, 3);
  };
  switch (id) {
    case IdentityId::carlitz:
    case IdentityId::eulerianA: range(1, 1, 5, 6); break;
    case IdentityId::multivariateA: range(1, 1, 4, 4); break;
    case IdentityId::wreathEulerian:
    case IdentityId::wreathNeg:
    case IdentityId::wreathFlag:
    case IdentityId::wreathFlagRk:
    case IdentityId::wreathNegMulti:
    case IdentityId::wreathFlagMulti:
    case IdentityId::wreathFlagRkMulti: wreath_grid(); break;
    case IdentityId::chowGessel:
    case IdentityId::chowGesselFlag: range(2, 1, 4, 5); break;
    case IdentityId::bNaturalMulti:
    case IdentityId::bFlagMulti: range(2, 1, 3, 3); break;
    case IdentityId::dEulerian: range(2, 2, 5, 5); break;
    case IdentityId::dNeg:
    case IdentityId::dNegMulti: range(2, 2, 4, 3); break;
  }
  return g;
}

}  // namespace wreathstat
