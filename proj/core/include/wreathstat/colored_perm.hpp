#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wreathstat/letter_order.hpp"

namespace wreathstat {

/// Parameters of the wreath product Z_r wr S_n: r colors, n letters.
class GroupSpec {
 public:
  GroupSpec() = default;
  GroupSpec(int r, int n);

  int r() const { return r_; }
  int n() const { return n_; }

  /// r^n * n!, or std::nullopt when it does not fit in 64 bits.
  std::optional<std::uint64_t> order() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  int r_ = 1;
  int n_ = 1;
};

/// An element of Z_r wr S_n in window notation.
///
/// Position j (1-based) holds the pair (pi(j), c_j). Values are immutable
/// once constructed; the constructor rejects anything that is not a group
/// element of the given spec.
class ColoredPermutation {
 public:
  ColoredPermutation(GroupSpec spec, std::vector<Letter> window);

  static ColoredPermutation identity(GroupSpec spec);
  /// Color-free element with the given one-line notation.
  static ColoredPermutation from_plain(GroupSpec spec, std::span<const int> letters);
  static ColoredPermutation from_parts(GroupSpec spec, std::span<const int> letters,
                                       std::span<const int> colors);

  const GroupSpec& spec() const { return spec_; }
  int size() const { return spec_.n(); }
  int r() const { return spec_.r(); }

  /// Entry at 1-based position j.
  const Letter& at(int j) const { return window_[static_cast<std::size_t>(j - 1)]; }
  int letter(int j) const { return at(j).value; }
  int color(int j) const { return at(j).color; }

  std::span<const Letter> window() const { return window_; }
  std::vector<int> letters() const;
  std::vector<int> colors() const;

  bool is_color_free() const;
  bool is_identity() const;

  friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;
  friend std::strong_ordering operator<=>(const ColoredPermutation& a,
                                          const ColoredPermutation& b);

 private:
  GroupSpec spec_;
  std::vector<Letter> window_;
};

/// Parses `[t1 t2 ... tn]` where each token is `letter` or `letter^color`.
/// For r = 2 the token `-j` is accepted as an alias of `j^1`.
ColoredPermutation parse_window(std::string_view text, GroupSpec spec);

/// Parses a window and infers n from the token count.
ColoredPermutation parse_window(std::string_view text, int r);

/// Canonical text form; color-0 letters are written without `^0`.
std::string format_window(const ColoredPermutation& g);

/// (g o h)(j): apply h, then g. Colors add modulo r.
ColoredPermutation compose(const ColoredPermutation& g, const ColoredPermutation& h);

ColoredPermutation inverse(const ColoredPermutation& g);

/// g = increasing o plain, with increasing in I_{r,n} for the chosen order.
struct Factorization {
  ColoredPermutation increasing;
  ColoredPermutation plain;
};

/// Sorting the window under `order` gives the increasing factor; the plain
/// factor records where each window entry lands. `order` must be wreath or
/// natural (r = 2).
Factorization decompose(const ColoredPermutation& g, OrderFlavor order = OrderFlavor::wreath);

/// Single-pass enumeration of a whole group.
///
/// Order: lexicographic on the plain one-line notation, then lexicographic
/// on the color vector (last position varies fastest).
class GroupEnumerator {
 public:
  explicit GroupEnumerator(GroupSpec spec);

  std::optional<ColoredPermutation> next();

 private:
  GroupSpec spec_;
  std::vector<int> letters_;
  std::vector<int> colors_;
  bool done_ = false;
};

std::vector<ColoredPermutation> enumerate_group(GroupSpec spec);

template <typename F>
void for_each_element(GroupSpec spec, F&& visit) {
  GroupEnumerator it(spec);
  while (auto g = it.next()) visit(*g);
}

/// Elements with empty type-A descent set under `order` (wreath, or natural
/// when r = 2). With `even_signs_only` (r = 2) keeps I*_{2,n}. Ordered
/// lexicographically by the color assigned to letters 1..n.
std::vector<ColoredPermutation> enumerate_increasing(GroupSpec spec,
                                                     OrderFlavor order = OrderFlavor::wreath,
                                                     bool even_signs_only = false);

/// The type-D subgroup D_n of B_n, in group enumeration order.
std::vector<ColoredPermutation> enumerate_type_d(int n);

/// All of S_n in lexicographic order.
std::vector<std::vector<int>> all_permutations(int n);

/// True iff the number of color-1 letters is even. Requires r = 2.
bool is_in_D(const ColoredPermutation& g);

/// Reverses the relative order of the color-1 letters (the k-th smallest
/// becomes the k-th largest), keeping positions and colors. Requires r = 2;
/// an involution carrying wreath descents to natural descents.
ColoredPermutation reverse_negative_entries(const ColoredPermutation& g);

}  // namespace wreathstat
