#pragma once

#include <vector>

#include "wreathstat/colored_perm.hpp"
#include "wreathstat/polyhedral.hpp"

namespace wreathstat {

/// Plain permutation plus the NNeg multiplicities of the increasing factor.
struct AlphaEncoding {
  int r = 1;
  std::vector<int> plain;
  std::vector<int> alpha;

  friend bool operator==(const AlphaEncoding&, const AlphaEncoding&) = default;
};

/// Plain permutation plus a color-change vector.
struct BetaEncoding {
  int r = 1;
  std::vector<int> plain;
  std::vector<int> beta;

  friend bool operator==(const BetaEncoding&, const BetaEncoding&) = default;
};

AlphaEncoding encode_alpha(const ColoredPermutation& g);
/// Inverse of encode_alpha: rebuilds the increasing factor from alpha.
ColoredPermutation decode_alpha(const AlphaEncoding& a);

/// beta_j = (alpha_j + [j in Des(pi)]) mod r.
BetaEncoding alpha_to_beta(const AlphaEncoding& a);
AlphaEncoding beta_to_alpha(const BetaEncoding& b);

/// Window letter pi(j) gets color (beta_j + ... + beta_n) mod r.
ColoredPermutation decode_beta(const BetaEncoding& b);
/// Window permutation and color-change vector of h.
BetaEncoding encode_beta(const ColoredPermutation& h);

/// Sends (ndes, nmajor) to (fdes, fmajor).
ColoredPermutation neg_flag_bijection(const ColoredPermutation& g);
ColoredPermutation flag_neg_bijection(const ColoredPermutation& h);

/// sum_{j in Des(pi)} v_j + sum_j alpha_j v_j with v_j = e_0 + e_pi(1) + ... + e_pi(j).
IntVector lattice_point_alpha(const AlphaEncoding& a);
/// sum_j beta_j v_j + sum_{j in Des(pi), beta_j = 0} r v_j.
IntVector lattice_point_beta(const BetaEncoding& b);

}  // namespace wreathstat
