#include "wreathstat/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace wreathstat {

std::string VarId::name() const {
  switch (kind) {
    case VarKind::Z: return "z" + std::to_string(index);
    case VarKind::W: return "w" + std::to_string(index);
    case VarKind::S: return "s";
    case VarKind::T: return "t";
    case VarKind::Q: return "q";
  }
  return "?";
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::initializer_list<std::pair<VarId, int>> factors) {
  for (const auto& [v, e] : factors) *this *= var(v, e);
}

Monomial Monomial::var(VarId v, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  Monomial m;
  if (exponent > 0) m.exps_.emplace_back(v, exponent);
  return m;
}

int Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(exps_.begin(), exps_.end(), v,
                             [](const auto& e, const VarId& x) { return e.first < x; });
  return it != exps_.end() && it->first == v ? it->second : 0;
}

int Monomial::grading_degree() const { return exponent(VarId::z(0)) + exponent(VarId::t()); }

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [v, e] : exps_) d += e;
  return d;
}

Monomial& Monomial::operator*=(const Monomial& o) {
  if (o.exps_.empty()) return *this;
  std::vector<std::pair<VarId, int>> merged;
  merged.reserve(exps_.size() + o.exps_.size());
  auto a = exps_.cbegin(), b = o.exps_.cbegin();
  while (a != exps_.cend() || b != o.exps_.cend()) {
    if (b == o.exps_.cend() || (a != exps_.cend() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == exps_.cend() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      merged.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  exps_ = std::move(merged);
  return *this;
}

Monomial Monomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  Monomial m;
  if (e == 0) return m;
  m.exps_ = exps_;
  for (auto& [v, x] : m.exps_) x *= e;
  return m;
}

std::string Monomial::to_string() const {
  if (exps_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : exps_) {
    if (!out.empty()) out += '*';
    out += v.name();
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  auto i = a.exps_.begin(), j = b.exps_.begin();
  while (i != a.exps_.end() && j != b.exps_.end()) {
    if (i->first == j->first) {
      if (i->second != j->second) return i->second <=> j->second;
      ++i;
      ++j;
    } else if (i->first < j->first) {
      return std::strong_ordering::greater;
    } else {
      return std::strong_ordering::less;
    }
  }
  if (i != a.exps_.end()) return std::strong_ordering::greater;
  if (j != b.exps_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(long c) {
  if (c != 0) terms_.emplace(Monomial{}, mpz_class(c));
}

Polynomial Polynomial::constant(const mpz_class& c) { return monomial(Monomial{}, c); }

Polynomial Polynomial::monomial(const Monomial& m, const mpz_class& c) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::var(VarId v, int exponent) { return monomial(Monomial::var(v, exponent)); }

mpz_class Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int Polynomial::max_grading_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.grading_degree());
  return d;
}

void Polynomial::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::scaled(const mpz_class& c) const {
  Polynomial out;
  if (c == 0) return out;
  for (const auto& [m, x] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, x * c);
  return out;
}

Polynomial Polynomial::times(const Monomial& m) const {
  Polynomial out;
  for (const auto& [x, c] : terms_) out.terms_.emplace(x * m, c);
  return out;
}

Polynomial Polynomial::truncated(int K) const {
  Polynomial out;
  for (const auto& [m, c] : terms_)
    if (m.grading_degree() <= K) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    mpz_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (m.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += m.to_string();
    }
  }
  return out;
}

Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }

Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }

Polynomial mul_truncated(const Polynomial& a, const Polynomial& b, int K) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms()) {
    int da = ma.grading_degree();
    if (da > K) continue;
    for (const auto& [mb, cb] : b.terms())
      if (da + mb.grading_degree() <= K) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

// ---------------------------------------------------------- series helpers

TruncatedSeries::TruncatedSeries(Polynomial p, int K) : poly(p.truncated(K)), order(K) {
  if (K < 0) throw std::invalid_argument("truncation order must be non-negative");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (o.order != order) throw std::invalid_argument("adding series truncated at different orders");
  poly += o.poly;
  return *this;
}

std::string RationalExpr::to_string() const {
  std::string out = "(" + numerator.to_string() + ")";
  if (denominator.empty()) return out;
  out += " / (";
  for (std::size_t i = 0; i < denominator.size(); ++i) {
    if (i) out += ")*(";
    out += "1 - " + denominator[i].to_string();
  }
  return out + ")";
}

Polynomial q_integer(int m, VarId v) {
  if (m < 0) throw std::invalid_argument("q-integer of a negative number");
  Polynomial p;
  for (int i = 0; i < m; ++i) p.add_term(Monomial::var(v, i), 1);
  return p;
}

TruncatedSeries expand(const RationalExpr& r, int K) {
  if (K < 0) throw std::invalid_argument("truncation order must be non-negative");
  for (const Monomial& d : r.denominator)
    if (d.grading_degree() < 1)
      throw std::invalid_argument("denominator factor 1 - " + d.to_string() +
                                  " has grading degree 0");
  Polynomial acc = r.numerator.truncated(K);
  for (const Monomial& d : r.denominator) {
    Polynomial sum = acc;
    Polynomial cur = acc;
    while (true) {
      cur = cur.times(d).truncated(K);
      if (cur.is_zero()) break;
      sum += cur;
    }
    acc = std::move(sum);
  }
  TruncatedSeries s;
  s.poly = std::move(acc);
  s.order = K;
  return s;
}

Polynomial specialize(const Polynomial& p, const Specialization& map) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Monomial image;
    for (const auto& [v, e] : m.factors()) {
      auto it = map.find(v);
      if (it == map.end())
        image *= Monomial::var(v, e);
      else
        image *= Monomial::var(it->second.first, e * it->second.second);
    }
    out.add_term(image, c);
  }
  return out;
}

TruncatedSeries specialize(const TruncatedSeries& s, const Specialization& map) {
  TruncatedSeries out;
  out.poly = specialize(s.poly, map).truncated(s.order);
  out.order = s.order;
  return out;
}

// --------------------------------------------------------------- Bernoulli

RationalPolynomial::RationalPolynomial(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpq_class RationalPolynomial::operator()(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string RationalPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const mpq_class& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

mpz_class binomial(int n, int k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

}  // namespace

mpq_class bernoulli_number(int n) {
  if (n < 0) throw std::invalid_argument("Bernoulli index must be non-negative");
  // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1
  std::vector<mpq_class> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    mpq_class s = 0;
    for (int k = 0; k < m; ++k) s += mpq_class(binomial(m + 1, k)) * b[static_cast<std::size_t>(k)];
    b[static_cast<std::size_t>(m)] = -s / mpq_class(m + 1);
    b[static_cast<std::size_t>(m)].canonicalize();
  }
  return b[static_cast<std::size_t>(n)];
}

RationalPolynomial bernoulli_polynomial(int n) {
  if (n < 0) throw std::invalid_argument("Bernoulli index must be non-negative");
  std::vector<mpq_class> coeffs(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    mpq_class c = mpq_class(binomial(n, k)) * bernoulli_number(k);
    c.canonicalize();
    coeffs[static_cast<std::size_t>(n - k)] = c;
  }
  return RationalPolynomial(std::move(coeffs));
}

// --------------------------------------------------------------------- LHS

std::string to_string(LhsKind k) {
  switch (k) {
    case LhsKind::productK1: return "productK1";
    case LhsKind::productRK1: return "productRK1";
    case LhsKind::qPower: return "qPower";
    case LhsKind::qPowerRK: return "qPowerRK";
    case LhsKind::signedQ: return "signedQ";
    case LhsKind::signedMulti: return "signedMulti";
    case LhsKind::typeD: return "typeD";
    case LhsKind::q2k1: return "q2k1";
    case LhsKind::powerRK: return "powerRK";
  }
  return "?";
}

namespace {

Polynomial power(const Polynomial& p, int e) {
  Polynomial acc = 1;
  for (int i = 0; i < e; ++i) acc *= p;
  return acc;
}

mpz_class type_d_coefficient(int n, int k) {
  mpz_class lead;
  mpz_ui_pow_ui(lead.get_mpz_t(), static_cast<unsigned long>(2 * k + 1), static_cast<unsigned long>(n));
  RationalPolynomial b = bernoulli_polynomial(n);
  mpq_class diff = b(mpq_class(k + 1)) - b(mpq_class(0));
  mpz_class two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
  mpq_class value = mpq_class(lead) - mpq_class(two_pow) * diff;
  value.canonicalize();
  if (value.get_den() != 1)
    throw std::logic_error("type D coefficient is not integral");
  return value.get_num();
}

}  // namespace

TruncatedSeries lhs_series(LhsKind kind, int r, int n, int K) {
  if (K < 0) throw std::invalid_argument("truncation order must be non-negative");
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  const bool multi = kind == LhsKind::productK1 || kind == LhsKind::productRK1 ||
                     kind == LhsKind::signedMulti;
  const VarId grading = multi ? VarId::z(0) : VarId::t();
  const VarId q = VarId::q();
  const Polynomial s = Polynomial::var(VarId::s());

  Polynomial total;
  for (int k = 0; k <= K; ++k) {
    Polynomial coeff;
    switch (kind) {
      case LhsKind::productK1:
      case LhsKind::productRK1: {
        int m = kind == LhsKind::productK1 ? k + 1 : r * k + 1;
        coeff = 1;
        for (int j = 1; j <= n; ++j) coeff *= q_integer(m, VarId::z(j));
        break;
      }
      case LhsKind::qPower: coeff = power(q_integer(k + 1, q), n); break;
      case LhsKind::qPowerRK: coeff = power(q_integer(r * k + 1, q), n); break;
      case LhsKind::q2k1: coeff = power(q_integer(2 * k + 1, q), n); break;
      case LhsKind::signedQ: coeff = power(q_integer(k + 1, q) + s * q_integer(k, q), n); break;
      case LhsKind::signedMulti: {
        coeff = 1;
        for (int j = 1; j <= n; ++j) {
          Polynomial wj = Polynomial::var(VarId::w(j));
          coeff *= q_integer(k + 1, VarId::z(j)) + s * wj * q_integer(k, VarId::w(j));
        }
        break;
      }
      case LhsKind::typeD: coeff = Polynomial::constant(type_d_coefficient(n, k)); break;
      case LhsKind::powerRK: {
        mpz_class v;
        mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(r * k + 1), static_cast<unsigned long>(n));
        coeff = Polynomial::constant(v);
        break;
      }
    }
    total += coeff.times(Monomial::var(grading, k));
  }
  TruncatedSeries out;
  out.poly = std::move(total);
  out.order = K;
  return out;
}

}  // namespace wreathstat
