#include "wreathstat/polyhedral.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "wreathstat/statistics.hpp"

namespace wreathstat {

// --------------------------------------------------------- HalfOpenSimplex

HalfOpenSimplex::HalfOpenSimplex(std::string label, std::vector<ChainLink> chain,
                                 std::vector<bool> strict, int scale)
    : label_(std::move(label)), chain_(std::move(chain)), strict_(std::move(strict)), scale_(scale) {
  const int n = dim();
  if (n < 1) throw std::invalid_argument("simplex needs at least one coordinate");
  if (static_cast<int>(strict_.size()) != n)
    throw std::invalid_argument("strict flags must match the chain length");
  if (scale_ < 1) throw std::invalid_argument("simplex scale must be positive");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const ChainLink& l : chain_) {
    if (l.coordinate < 1 || l.coordinate > n || seen[static_cast<std::size_t>(l.coordinate)])
      throw std::invalid_argument("chain coordinates must be a permutation of 1..n");
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("chain sign must be +1 or -1");
    seen[static_cast<std::size_t>(l.coordinate)] = true;
  }
}

HalfOpenSimplex HalfOpenSimplex::unsigned_simplex(std::span<const int> pi, int scale) {
  const int n = static_cast<int>(pi.size());
  std::vector<ChainLink> chain;
  std::vector<bool> strict(static_cast<std::size_t>(n), false);
  for (int v : pi) chain.push_back({v, 1});
  for (int j : classical_descents(pi)) strict[static_cast<std::size_t>(j - 1)] = true;
  std::string label = "[";
  for (int j = 0; j < n; ++j) label += (j ? " " : "") + std::to_string(pi[static_cast<std::size_t>(j)]);
  label += "]";
  return {label, std::move(chain), std::move(strict), scale};
}

HalfOpenSimplex HalfOpenSimplex::signed_simplex(const ColoredPermutation& g) {
  if (g.r() != 2) throw std::invalid_argument("signed simplices need r = 2");
  const int n = g.size();
  std::vector<ChainLink> chain;
  for (int j = 1; j <= n; ++j) {
    int i = n + 1 - j;
    chain.push_back({g.letter(i), g.color(i) != 0 ? -1 : 1});
  }
  std::vector<bool> strict(static_cast<std::size_t>(n), false);
  for (int i : descent_set(g, OrderFlavor::natural)) strict[static_cast<std::size_t>(n - i - 1)] = true;
  return {format_window(g), std::move(chain), std::move(strict), 1};
}

std::vector<int> HalfOpenSimplex::strict_positions() const {
  std::vector<int> out;
  for (int j = 0; j < dim(); ++j)
    if (strict_[static_cast<std::size_t>(j)]) out.push_back(j + 1);
  return out;
}

bool HalfOpenSimplex::contains(std::span<const mpq_class> x) const {
  if (static_cast<int>(x.size()) != dim()) throw std::invalid_argument("point dimension mismatch");
  mpq_class upper = scale_;
  for (int j = 0; j < dim(); ++j) {
    const ChainLink& l = chain_[static_cast<std::size_t>(j)];
    mpq_class v = x[static_cast<std::size_t>(l.coordinate - 1)] * l.sign;
    if (v > upper) return false;
    if (j > 0 && strict_[static_cast<std::size_t>(j - 1)] && v == upper) return false;
    upper = v;
  }
  if (upper < 0) return false;
  return !(strict_.back() && upper == 0);
}

bool HalfOpenSimplex::contains_scaled(std::span<const long long> x, long long height) const {
  if (static_cast<int>(x.size()) != dim()) throw std::invalid_argument("point dimension mismatch");
  long long upper = height * scale_;
  for (int j = 0; j < dim(); ++j) {
    const ChainLink& l = chain_[static_cast<std::size_t>(j)];
    long long v = x[static_cast<std::size_t>(l.coordinate - 1)] * l.sign;
    if (v > upper) return false;
    if (j > 0 && strict_[static_cast<std::size_t>(j - 1)] && v == upper) return false;
    upper = v;
  }
  if (upper < 0) return false;
  return !(strict_.back() && upper == 0);
}

std::string HalfOpenSimplex::describe() const {
  std::string out = "0";
  for (int j = dim(); j >= 1; --j) {
    const ChainLink& l = chain_[static_cast<std::size_t>(j - 1)];
    out += strict_[static_cast<std::size_t>(j - 1)] ? " < " : " <= ";
    out += (l.sign < 0 ? "-x" : "x") + std::to_string(l.coordinate);
  }
  return out + " <= " + std::to_string(scale_);
}

std::vector<HalfOpenSimplex> triangulate_cube(int n, int r) {
  if (r < 1) throw std::invalid_argument("cube scale must be positive");
  std::vector<HalfOpenSimplex> out;
  for (const auto& pi : all_permutations(n)) out.push_back(HalfOpenSimplex::unsigned_simplex(pi, r));
  return out;
}

std::vector<HalfOpenSimplex> triangulate_signed_cube(int n) {
  std::vector<HalfOpenSimplex> out;
  for_each_element(GroupSpec(2, n),
                   [&](const ColoredPermutation& g) { out.push_back(HalfOpenSimplex::signed_simplex(g)); });
  return out;
}

LocateResult locate(std::span<const mpq_class> x, int n, int r) {
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("point has " + std::to_string(x.size()) + " coordinates, expected " +
                                std::to_string(n));
  for (const mpq_class& v : x)
    if (v < 0 || v > r) throw std::invalid_argument("point lies outside the cube [0," + std::to_string(r) + "]^n");
  std::vector<int> pi(static_cast<std::size_t>(n));
  std::iota(pi.begin(), pi.end(), 1);
  std::stable_sort(pi.begin(), pi.end(), [&](int a, int b) {
    return x[static_cast<std::size_t>(a - 1)] > x[static_cast<std::size_t>(b - 1)];
  });
  auto simplex = HalfOpenSimplex::unsigned_simplex(pi, r);
  if (!simplex.contains(x)) throw std::logic_error("located simplex does not contain the point");
  return {std::move(pi), std::move(simplex)};
}

// ----------------------------------------------------------------- cones

namespace {

mpz_class det_bareiss(std::vector<std::vector<mpz_class>> a) {
  const std::size_t m = a.size();
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k < m; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < m && a[p][k] == 0) ++p;
      if (p == m) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[m - 1][m - 1];
}

std::vector<std::vector<mpz_class>> column_matrix(const std::vector<IntVector>& columns) {
  const std::size_t m = columns.size();
  std::vector<std::vector<mpz_class>> a(m, std::vector<mpz_class>(m));
  for (std::size_t j = 0; j < m; ++j) {
    if (columns[j].size() != m) throw std::invalid_argument("matrix must be square");
    for (std::size_t i = 0; i < m; ++i) a[i][j] = static_cast<long>(columns[j][i]);
  }
  return a;
}

// Solves V * lambda = p as lambda = num / den with den > 0.
class CoordinateFrame {
 public:
  explicit CoordinateFrame(const std::vector<IntVector>& columns) : m_(columns.size()) {
    auto a = column_matrix(columns);
    den_ = det_bareiss(a);
    if (den_ == 0) throw std::invalid_argument("cone generators are linearly dependent");
    // adjugate via a rational inverse
    std::vector<std::vector<mpq_class>> aug(m_, std::vector<mpq_class>(2 * m_));
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < m_; ++j) aug[i][j] = a[i][j];
      aug[i][m_ + i] = 1;
    }
    for (std::size_t c = 0; c < m_; ++c) {
      std::size_t p = c;
      while (aug[p][c] == 0) ++p;
      std::swap(aug[c], aug[p]);
      mpq_class inv = 1 / aug[c][c];
      for (auto& v : aug[c]) v *= inv;
      for (std::size_t i = 0; i < m_; ++i) {
        if (i == c || aug[i][c] == 0) continue;
        mpq_class f = aug[i][c];
        for (std::size_t j = 0; j < 2 * m_; ++j) aug[i][j] -= f * aug[c][j];
      }
    }
    if (den_ < 0) den_ = -den_;
    adj_.assign(m_, std::vector<mpz_class>(m_));
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < m_; ++j) {
        mpq_class v = aug[i][m_ + j] * den_;
        v.canonicalize();
        adj_[i][j] = v.get_num();
      }
  }

  const mpz_class& denominator() const { return den_; }

  std::vector<mpz_class> numerators(std::span<const long long> p) const {
    std::vector<mpz_class> out(m_);
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < m_; ++j) out[i] += adj_[i][j] * static_cast<long>(p[j]);
    return out;
  }

 private:
  std::size_t m_;
  mpz_class den_;
  std::vector<std::vector<mpz_class>> adj_;
};

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

mpz_class ceil_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Diagonal of a lower-triangular basis of the lattice spanned by the columns.
std::vector<long long> hermite_diagonal(const std::vector<IntVector>& columns) {
  const std::size_t m = columns.size();
  std::vector<IntVector> c = columns;
  std::vector<long long> diag(m);
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t j = row + 1; j < m; ++j) {
      while (c[j][row] != 0) {
        long long q = c[row][row] / c[j][row];
        for (std::size_t i = 0; i < m; ++i) c[row][i] -= q * c[j][i];
        std::swap(c[row], c[j]);
      }
    }
    if (c[row][row] < 0)
      for (auto& v : c[row]) v = -v;
    diag[row] = c[row][row];
  }
  return diag;
}

// All integer vectors with 0 <= p_i < bound_i.
template <typename F>
void for_each_box_point(const std::vector<long long>& bound, F&& visit) {
  const std::size_t m = bound.size();
  IntVector p(m, 0);
  while (true) {
    visit(static_cast<const IntVector&>(p));
    std::size_t i = m;
    while (i > 0 && p[i - 1] + 1 == bound[i - 1]) p[--i] = 0;
    if (i == 0) return;
    ++p[i - 1];
  }
}

// Reduces p into the parallelepiped with lambda_j in [0,1) (closed j) or (0,1] (open j).
IntVector reduce_into(const IntVector& p, const CoordinateFrame& frame, const SimplicialCone& c,
                      const std::vector<bool>& half_open_up) {
  auto num = frame.numerators(p);
  IntVector q = p;
  for (int j = 0; j < c.dim(); ++j) {
    mpz_class k = half_open_up[static_cast<std::size_t>(j)]
                      ? ceil_div(num[static_cast<std::size_t>(j)], frame.denominator()) - 1
                      : floor_div(num[static_cast<std::size_t>(j)], frame.denominator());
    long long kk = k.get_si();
    if (kk == 0) continue;
    for (int i = 0; i < c.dim(); ++i)
      q[static_cast<std::size_t>(i)] -= kk * c.generators()[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  }
  return q;
}

std::vector<IntVector> closed_points_unimodular(const SimplicialCone& c) {
  std::vector<IntVector> out;
  for_each_box_point(c.scaling(), [&](const IntVector& alpha) {
    IntVector p(static_cast<std::size_t>(c.dim()), 0);
    for (int j = 0; j < c.dim(); ++j)
      for (int i = 0; i < c.dim(); ++i)
        p[static_cast<std::size_t>(i)] += alpha[static_cast<std::size_t>(j)] * c.base()[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    out.push_back(std::move(p));
  });
  return out;
}

std::vector<IntVector> sorted(std::vector<IntVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

mpz_class determinant(const std::vector<IntVector>& columns) { return det_bareiss(column_matrix(columns)); }

mpz_class determinant(const SimplicialCone& c) { return determinant(c.generators()); }

SimplicialCone::SimplicialCone(std::vector<IntVector> base, std::vector<long long> scaling,
                               std::vector<bool> open, std::optional<HalfOpenSimplex> source)
    : base_(std::move(base)), scaling_(std::move(scaling)), open_(std::move(open)), source_(std::move(source)) {
  const std::size_t m = base_.size();
  if (m == 0) throw std::invalid_argument("cone needs at least one generator");
  if (scaling_.size() != m || open_.size() != m)
    throw std::invalid_argument("scaling and open flags must match the generator count");
  for (long long s : scaling_)
    if (s <= 0) throw std::invalid_argument("generator scalings must be positive");
  for (const auto& b : base_)
    if (b.size() != m) throw std::invalid_argument("generators must live in dimension equal to their count");
  if (determinant(base_) == 0) throw std::invalid_argument("cone generators are linearly dependent");
  generators_ = base_;
  for (std::size_t j = 0; j < m; ++j)
    for (auto& v : generators_[j]) v *= scaling_[j];
  if (source_ && source_->dim() + 1 != static_cast<int>(m))
    throw std::invalid_argument("source simplex dimension does not match the cone");
}

bool SimplicialCone::is_scaled_unimodular() const { return abs(determinant(base_)) == 1; }

SimplicialCone cone_over(const HalfOpenSimplex& s, std::vector<long long> scaling) {
  const int n = s.dim();
  if (static_cast<int>(scaling.size()) != n + 1)
    throw std::invalid_argument("scaling needs n+1 entries");
  std::vector<IntVector> base;
  IntVector v(static_cast<std::size_t>(n) + 1, 0);
  v[0] = 1;
  base.push_back(v);
  for (const ChainLink& l : s.chain()) {
    v[static_cast<std::size_t>(l.coordinate)] = static_cast<long long>(l.sign) * s.scale();
    base.push_back(v);
  }
  std::vector<bool> open(static_cast<std::size_t>(n) + 1, false);
  for (int j = 1; j <= n; ++j) open[static_cast<std::size_t>(j)] = s.strict()[static_cast<std::size_t>(j - 1)];
  return {std::move(base), std::move(scaling), std::move(open), s};
}

SimplicialCone cone_over(const HalfOpenSimplex& s) { return cone_over(s, unit_scaling(s.dim())); }

std::vector<long long> unit_scaling(int n) { return std::vector<long long>(static_cast<std::size_t>(n) + 1, 1); }

std::vector<long long> wreath_scaling(int n, int r) {
  std::vector<long long> s(static_cast<std::size_t>(n) + 1, r);
  s[0] = 1;
  return s;
}

std::vector<long long> type_d_scaling(int n) {
  std::vector<long long> s(static_cast<std::size_t>(n) + 1, 2);
  s.front() = 1;
  s.back() = 1;
  return s;
}

std::vector<IntVector> closed_fpp_points(const SimplicialCone& c) {
  if (c.is_scaled_unimodular()) return sorted(closed_points_unimodular(c));
  return closed_fpp_points_hnf(c);
}

std::vector<IntVector> closed_fpp_points_hnf(const SimplicialCone& c) {
  CoordinateFrame frame(c.generators());
  std::vector<bool> closed(static_cast<std::size_t>(c.dim()), false);
  std::vector<IntVector> out;
  for_each_box_point(hermite_diagonal(c.generators()),
                     [&](const IntVector& p) { out.push_back(reduce_into(p, frame, c, closed)); });
  return sorted(std::move(out));
}

std::vector<IntVector> fpp_points(const SimplicialCone& c, ShiftMethod method) {
  const int m = c.dim();
  std::vector<IntVector> out;
  if (method == ShiftMethod::offBoundary) {
    CoordinateFrame frame(c.generators());
    for (IntVector p : closed_fpp_points(c)) {
      auto num = frame.numerators(p);
      for (int j = 0; j < m; ++j) {
        if (!c.open()[static_cast<std::size_t>(j)] || num[static_cast<std::size_t>(j)] != 0) continue;
        for (int i = 0; i < m; ++i)
          p[static_cast<std::size_t>(i)] += c.generators()[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      }
      out.push_back(std::move(p));
    }
    return sorted(std::move(out));
  }

  if (c.is_scaled_unimodular()) {
    IntVector shift(static_cast<std::size_t>(m), 0);
    for (int j = 0; j < m; ++j)
      if (c.open()[static_cast<std::size_t>(j)])
        for (int i = 0; i < m; ++i)
          shift[static_cast<std::size_t>(i)] += c.base()[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    for (IntVector p : closed_points_unimodular(c)) {
      for (int i = 0; i < m; ++i) p[static_cast<std::size_t>(i)] += shift[static_cast<std::size_t>(i)];
      out.push_back(std::move(p));
    }
    return sorted(std::move(out));
  }

  // Translating by eps * (sum of open generators) for tiny eps > 0 turns the
  // window [0,1) into [eps, 1+eps) on open coordinates; on lattice points
  // that is (0,1].
  CoordinateFrame frame(c.generators());
  for_each_box_point(hermite_diagonal(c.generators()),
                     [&](const IntVector& p) { out.push_back(reduce_into(p, frame, c, c.open())); });
  return sorted(std::move(out));
}

Monomial point_monomial(std::span<const long long> p) {
  Monomial m = Monomial::var(VarId::z(0), static_cast<int>(p[0]));
  if (p[0] < 0) throw std::invalid_argument("grading coordinate must be non-negative");
  for (std::size_t i = 1; i < p.size(); ++i) {
    int v = static_cast<int>(p[i]);
    if (v > 0)
      m *= Monomial::var(VarId::z(static_cast<int>(i)), v);
    else if (v < 0)
      m *= Monomial::var(VarId::s()) * Monomial::var(VarId::w(static_cast<int>(i)), -v);
  }
  return m;
}

namespace {

Monomial generator_monomial(const IntVector& g) {
  Monomial m = Monomial::var(VarId::z(0), static_cast<int>(g[0]));
  for (std::size_t i = 1; i < g.size(); ++i) {
    int v = static_cast<int>(g[i]);
    if (v > 0)
      m *= Monomial::var(VarId::z(static_cast<int>(i)), v);
    else if (v < 0)
      m *= Monomial::var(VarId::w(static_cast<int>(i)), -v);
  }
  return m;
}

}  // namespace

RationalExpr sigma_rational(const SimplicialCone& c, ShiftMethod method) {
  RationalExpr r;
  for (const IntVector& p : fpp_points(c, method)) r.numerator.add_term(point_monomial(p), 1);
  for (const IntVector& g : c.generators()) r.denominator.push_back(generator_monomial(g));
  return r;
}

// ------------------------------------------------------------ brute force

TruncatedSeries sigma_bruteforce(const HalfOpenSimplex& s, int K) {
  if (K < 0) throw std::invalid_argument("truncation order must be non-negative");
  const int n = s.dim();
  Polynomial acc;
  IntVector x(static_cast<std::size_t>(n) + 1, 0);
  std::function<void(int, long long)> walk = [&](int j, long long upper) {
    if (j == n) {
      if (s.strict().back() && upper == 0) return;
      acc.add_term(point_monomial(x), 1);
      return;
    }
    // choose L_{j+1}; strict[j-1] forbids equality with L_j
    long long hi = (j > 0 && s.strict()[static_cast<std::size_t>(j - 1)]) ? upper - 1 : upper;
    const ChainLink& l = s.chain()[static_cast<std::size_t>(j)];
    for (long long v = 0; v <= hi; ++v) {
      x[static_cast<std::size_t>(l.coordinate)] = l.sign * v;
      walk(j + 1, v);
    }
    x[static_cast<std::size_t>(l.coordinate)] = 0;
  };
  for (int h = 0; h <= K; ++h) {
    x[0] = h;
    walk(0, static_cast<long long>(h) * s.scale());
  }
  return {std::move(acc), K};
}

TruncatedSeries sigma_bruteforce(const SimplicialCone& c, int K) {
  if (!c.source()) throw std::invalid_argument("cone has no H-description to enumerate");
  return sigma_bruteforce(*c.source(), K);
}

namespace {

TruncatedSeries box_bruteforce(int n, long long lo_per_height, long long hi_per_height, int K) {
  if (K < 0) throw std::invalid_argument("truncation order must be non-negative");
  Polynomial acc;
  IntVector x(static_cast<std::size_t>(n) + 1, 0);
  for (int h = 0; h <= K; ++h) {
    x[0] = h;
    std::vector<long long> bound(static_cast<std::size_t>(n), (hi_per_height - lo_per_height) * h + 1);
    for_each_box_point(bound, [&](const IntVector& off) {
      for (int i = 0; i < n; ++i)
        x[static_cast<std::size_t>(i) + 1] = lo_per_height * h + off[static_cast<std::size_t>(i)];
      acc.add_term(point_monomial(x), 1);
    });
  }
  return {std::move(acc), K};
}

}  // namespace

TruncatedSeries sigma_cube_bruteforce(int n, int r, int K) { return box_bruteforce(n, 0, r, K); }

TruncatedSeries sigma_signed_cube_bruteforce(int n, int K) { return box_bruteforce(n, -1, 1, K); }

}  // namespace wreathstat
