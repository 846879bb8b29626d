#pragma once

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "wreathstat/colored_perm.hpp"
#include "wreathstat/letter_order.hpp"

namespace wreathstat {

// Classical statistics of a plain permutation in one-line notation.
std::vector<int> classical_descents(std::span<const int> pi);
int classical_maj(std::span<const int> pi);
int classical_des(std::span<const int> pi);

/// Requires a color-free element.
std::vector<int> classical_descents(const ColoredPermutation& g);
int classical_maj(const ColoredPermutation& g);

/// Full descent set with flavor-specific sentinels.
///
///  - wreath: positions 0..n-1, left sentinel 0^0.
///  - steingrimsson: positions 1..n, right sentinel (n+1)^0.
///  - natural: positions 0..n-1, left sentinel 0 (r = 2).
///  - naturalD: positions 0..n-1 in the signed integer order with left
///    sentinel -e_2 pi(2); needs r = 2, n >= 2 and g in D_n.
std::vector<int> descent_set(const ColoredPermutation& g, OrderFlavor flavor);

int des(const ColoredPermutation& g);
int stdes(const ColoredPermutation& g);
int natdes(const ColoredPermutation& g);
int natmaj(const ColoredPermutation& g);
int dnatdes(const ColoredPermutation& g);

/// Interior descents (positions 1..n-1) under `order`, no sentinels.
std::vector<int> type_a_descents(const ColoredPermutation& g, OrderFlavor order = OrderFlavor::wreath);
int type_a_major(const ColoredPermutation& g, OrderFlavor order = OrderFlavor::wreath);

std::vector<int> neg_set(const ColoredPermutation& g);
int neg(const ColoredPermutation& g);
int col(const ColoredPermutation& g);

/// Multiset of positions stored as sorted (position, multiplicity) pairs.
class PositionMultiset {
 public:
  PositionMultiset() = default;
  static PositionMultiset from_set(std::span<const int> positions);

  void add(int position, int multiplicity = 1);
  int multiplicity(int position) const;
  int cardinality() const;
  long long sum() const;
  bool empty() const { return entries_.empty(); }

  const std::vector<std::pair<int, int>>& entries() const { return entries_; }
  /// Positions repeated by multiplicity, ascending.
  std::vector<int> expanded() const;

  /// Multiset union: multiplicities add.
  friend PositionMultiset operator+(PositionMultiset a, const PositionMultiset& b);
  friend bool operator==(const PositionMultiset&, const PositionMultiset&) = default;

 private:
  std::vector<std::pair<int, int>> entries_;
};

/// Position i with multiplicity c_i, read off g's own window. Callers apply
/// it to inverse(g) to obtain the negative inverse multiset.
PositionMultiset nneg_multiset(const ColoredPermutation& g);

PositionMultiset ndes_multiset(const ColoredPermutation& g);
int ndes(const ColoredPermutation& g);
int nmajor(const ColoredPermutation& g);

struct ColorChangeVector {
  int r = 1;
  std::vector<int> a;  // a[j-1] = a_j

  int ch() const;
  /// ceil(ch / r)
  int ch_ceil() const;
};

ColorChangeVector color_changes(std::span<const int> colors, int r);
ColorChangeVector color_changes(const ColoredPermutation& g);
int ch(const ColoredPermutation& g);

int fdes(const ColoredPermutation& g);
int fmajor(const ColoredPermutation& g);

/// 2 * natmajor_A + neg, r = 2.
int natfmaj(const ColoredPermutation& g);
int nat_type_a_major(const ColoredPermutation& g);

/// Des_A under naturalD plus {j-1 : j in Neg(g^-1), j != 1}. Requires g in D_n, n >= 2.
PositionMultiset dndes_multiset(const ColoredPermutation& g);
/// Same multiset computed as {pi(i)-1 : c_i = 1} minus {0}.
PositionMultiset dndes_multiset_direct(const ColoredPermutation& g);
int dndes(const ColoredPermutation& g);
int dnmajor(const ColoredPermutation& g);

enum class DescentCause { none, zero, colorChange, standard };
std::string_view to_string(DescentCause c);

/// One tag per position 0..n-1 under the wreath order.
std::vector<DescentCause> classify_descents(const ColoredPermutation& g);

/// Color-change descent positions found from the partial sums of the color
/// change vector: k qualifies when floor(A_k / r) > floor(A_{k+1} / r), with
/// A_k = a_k + ... + a_n. Ascending.
std::vector<int> color_change_descents(std::span<const int> colors, int r);

}  // namespace wreathstat
