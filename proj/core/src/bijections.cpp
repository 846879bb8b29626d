#include "wreathstat/bijections.hpp"

#include <algorithm>
#include <stdexcept>

#include "wreathstat/statistics.hpp"

namespace wreathstat {

namespace {

std::vector<bool> descent_mask(const std::vector<int>& pi) {
  std::vector<bool> mask(pi.size() + 1, false);
  for (int j : classical_descents(pi)) mask[static_cast<std::size_t>(j)] = true;
  return mask;
}

void check_encoding(int r, const std::vector<int>& plain, const std::vector<int>& v) {
  if (plain.size() != v.size()) throw std::invalid_argument("encoding vectors differ in length");
  for (int x : v)
    if (x < 0 || x >= r) throw std::invalid_argument("encoding entry out of range 0..r-1");
}

IntVector accumulate_chain(const std::vector<int>& pi, const std::vector<long long>& coeff) {
  const std::size_t n = pi.size();
  IntVector p(n + 1, 0);
  // v_j has ones at 0 and pi(1..j); coefficient of e_pi(l) is sum_{j>=l} coeff_j
  long long tail = 0;
  for (std::size_t l = n; l >= 1; --l) {
    tail += coeff[l - 1];
    p[static_cast<std::size_t>(pi[l - 1])] = tail;
  }
  p[0] = tail;
  return p;
}

}  // namespace

AlphaEncoding encode_alpha(const ColoredPermutation& g) {
  AlphaEncoding a;
  a.r = g.r();
  a.plain = decompose(g).plain.letters();
  auto nneg = nneg_multiset(inverse(g));
  a.alpha.resize(static_cast<std::size_t>(g.size()));
  for (int j = 1; j <= g.size(); ++j) a.alpha[static_cast<std::size_t>(j - 1)] = nneg.multiplicity(j);
  return a;
}

ColoredPermutation decode_alpha(const AlphaEncoding& a) {
  check_encoding(a.r, a.plain, a.alpha);
  const int n = static_cast<int>(a.plain.size());
  GroupSpec spec(a.r, n);
  std::vector<Letter> inc;
  for (int i = 1; i <= n; ++i) inc.push_back({i, (a.r - a.alpha[static_cast<std::size_t>(i - 1)]) % a.r});
  std::sort(inc.begin(), inc.end(),
            [](const Letter& x, const Letter& y) { return letter_less(x, y, OrderFlavor::wreath); });
  return compose(ColoredPermutation(spec, std::move(inc)), ColoredPermutation::from_plain(spec, a.plain));
}

BetaEncoding alpha_to_beta(const AlphaEncoding& a) {
  check_encoding(a.r, a.plain, a.alpha);
  auto des = descent_mask(a.plain);
  BetaEncoding b{a.r, a.plain, a.alpha};
  for (std::size_t j = 1; j <= b.beta.size(); ++j)
    if (des[j]) b.beta[j - 1] = (b.beta[j - 1] + 1) % a.r;
  return b;
}

AlphaEncoding beta_to_alpha(const BetaEncoding& b) {
  check_encoding(b.r, b.plain, b.beta);
  auto des = descent_mask(b.plain);
  AlphaEncoding a{b.r, b.plain, b.beta};
  for (std::size_t j = 1; j <= a.alpha.size(); ++j)
    if (des[j]) a.alpha[j - 1] = (a.alpha[j - 1] + b.r - 1) % b.r;
  return a;
}

ColoredPermutation decode_beta(const BetaEncoding& b) {
  check_encoding(b.r, b.plain, b.beta);
  const int n = static_cast<int>(b.plain.size());
  std::vector<int> colors(static_cast<std::size_t>(n));
  int tail = 0;
  for (int j = n; j >= 1; --j) {
    tail = (tail + b.beta[static_cast<std::size_t>(j - 1)]) % b.r;
    colors[static_cast<std::size_t>(j - 1)] = tail;
  }
  return ColoredPermutation::from_parts(GroupSpec(b.r, n), b.plain, colors);
}

BetaEncoding encode_beta(const ColoredPermutation& h) {
  return {h.r(), h.letters(), color_changes(h).a};
}

ColoredPermutation neg_flag_bijection(const ColoredPermutation& g) {
  return decode_beta(alpha_to_beta(encode_alpha(g)));
}

ColoredPermutation flag_neg_bijection(const ColoredPermutation& h) {
  return decode_alpha(beta_to_alpha(encode_beta(h)));
}

IntVector lattice_point_alpha(const AlphaEncoding& a) {
  auto des = descent_mask(a.plain);
  std::vector<long long> coeff(a.alpha.size());
  for (std::size_t j = 1; j <= coeff.size(); ++j) coeff[j - 1] = a.alpha[j - 1] + (des[j] ? 1 : 0);
  return accumulate_chain(a.plain, coeff);
}

IntVector lattice_point_beta(const BetaEncoding& b) {
  auto des = descent_mask(b.plain);
  std::vector<long long> coeff(b.beta.size());
  for (std::size_t j = 1; j <= coeff.size(); ++j)
    coeff[j - 1] = b.beta[j - 1] + (des[j] && b.beta[j - 1] == 0 ? b.r : 0);
  return accumulate_chain(b.plain, coeff);
}

}  // namespace wreathstat
