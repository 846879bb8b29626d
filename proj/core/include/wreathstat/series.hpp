#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wreathstat {

/// Variable families, in printing order: z0..zn, w1..wn, s, t, q.
enum class VarKind : std::uint8_t { Z, W, S, T, Q };

struct VarId {
  VarKind kind = VarKind::Z;
  int index = 0;

  static VarId z(int i) { return {VarKind::Z, i}; }
  static VarId w(int j) { return {VarKind::W, j}; }
  static VarId s() { return {VarKind::S, 0}; }
  static VarId t() { return {VarKind::T, 0}; }
  static VarId q() { return {VarKind::Q, 0}; }

  std::string name() const;

  friend bool operator==(const VarId&, const VarId&) = default;
  friend auto operator<=>(const VarId&, const VarId&) = default;
};

/// Sparse exponent vector; entries sorted by variable, exponents positive.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<std::pair<VarId, int>> factors);
  static Monomial var(VarId v, int exponent = 1);

  int exponent(VarId v) const;
  /// exponent of z0 plus exponent of t
  int grading_degree() const;
  int total_degree() const;
  bool is_one() const { return exps_.empty(); }

  const std::vector<std::pair<VarId, int>>& factors() const { return exps_; }

  Monomial& operator*=(const Monomial& o);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  Monomial pow(int e) const;

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Lexicographic on dense exponent vectors, variables in printing order.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<std::pair<VarId, int>> exps_;
};

/// Exact polynomial with arbitrary-precision integer coefficients.
class Polynomial {
 public:
  using Terms = std::map<Monomial, mpz_class>;

  Polynomial() = default;
  Polynomial(long c);  // NOLINT(google-explicit-constructor)
  static Polynomial constant(const mpz_class& c);
  static Polynomial monomial(const Monomial& m, const mpz_class& c = 1);
  static Polynomial var(VarId v, int exponent = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  mpz_class coefficient(const Monomial& m) const;
  int max_grading_degree() const;

  void add_term(const Monomial& m, const mpz_class& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial scaled(const mpz_class& c) const;
  Polynomial times(const Monomial& m) const;

  /// Drops every monomial of grading degree above K.
  Polynomial truncated(int K) const;

  /// Terms printed in descending monomial order, e.g. `3*z0^2*z1 + 1`.
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  Terms terms_;
};

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial mul(const Polynomial& a, const Polynomial& b);
/// Product with every monomial of grading degree above K dropped.
Polynomial mul_truncated(const Polynomial& a, const Polynomial& b, int K);

/// Polynomial whose monomials all have grading degree at most `order`.
struct TruncatedSeries {
  Polynomial poly;
  int order = 0;

  TruncatedSeries() = default;
  TruncatedSeries(Polynomial p, int K);

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
};

/// numerator / prod_i (1 - denominator[i]).
struct RationalExpr {
  Polynomial numerator;
  std::vector<Monomial> denominator;

  std::string to_string() const;
};

/// 1 + v + ... + v^(m-1).
Polynomial q_integer(int m, VarId v);

/// Geometric expansion of every denominator factor, truncated at grading
/// degree K. Throws std::invalid_argument when a factor has grading degree 0.
TruncatedSeries expand(const RationalExpr& r, int K);

/// Substitution target: v -> target^power.
using Specialization = std::map<VarId, std::pair<VarId, int>>;
/// Variables absent from the map are kept as they are.
Polynomial specialize(const Polynomial& p, const Specialization& map);
TruncatedSeries specialize(const TruncatedSeries& s, const Specialization& map);

/// Univariate polynomial with exact rational coefficients; coeffs[i] is x^i.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<mpq_class> coeffs);

  const std::vector<mpq_class>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  mpq_class operator()(const mpq_class& x) const;
  std::string to_string() const;

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

 private:
  std::vector<mpq_class> coeffs_;
};

/// Bernoulli numbers with B_1 = -1/2.
mpq_class bernoulli_number(int n);
RationalPolynomial bernoulli_polynomial(int n);

/// Left-hand-side families of the generating-function identities. The
/// k-th coefficient (times grading^k) is:
///   productK1    prod_j [k+1]_{z_j}
///   productRK1   prod_j [rk+1]_{z_j}
///   qPower       [k+1]_q^n
///   qPowerRK     [rk+1]_q^n
///   signedQ      ([k+1]_q + s [k]_q)^n
///   signedMulti  prod_j ([k+1]_{z_j} + s (w_j + ... + w_j^k))
///   typeD        (2k+1)^n - 2^(n-1) (B_n(k+1) - B_n(0))
///   q2k1         [2k+1]_q^n
///   powerRK      (rk+1)^n
/// Multivariate kinds grade by z0, the others by t.
enum class LhsKind { productK1, productRK1, qPower, qPowerRK, signedQ, signedMulti, typeD, q2k1, powerRK };

std::string to_string(LhsKind k);

TruncatedSeries lhs_series(LhsKind kind, int r, int n, int K);

}  // namespace wreathstat
