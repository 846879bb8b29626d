#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace wreathstat {

/// A colored letter j^c. Letter 0 and n+1 (color 0) are used as sentinels.
struct Letter {
  int value = 0;
  int color = 0;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Total orders on colored letters used by the descent statistics.
///
///  - wreath: higher color is smaller, ties broken by letter value.
///  - steingrimsson: higher color is larger, ties broken by letter value.
///  - natural: signed integers, -n < ... < -1 < 1 < ... < n (r = 2).
///  - naturalD: -1 < -2 < ... < -n < 1 < ... < n (r = 2).
enum class OrderFlavor { wreath, steingrimsson, natural, naturalD };

std::string_view to_string(OrderFlavor f);
OrderFlavor order_flavor_from_string(std::string_view s);

/// True for flavors only defined on signed permutations.
inline bool requires_signed(OrderFlavor f) {
  return f == OrderFlavor::natural || f == OrderFlavor::naturalD;
}

/// Signed integer value of a letter for r = 2 (color 1 means negative).
inline int signed_value(const Letter& l) { return l.color != 0 ? -l.value : l.value; }

std::strong_ordering compare_letters(const Letter& a, const Letter& b, OrderFlavor order);

inline bool letter_less(const Letter& a, const Letter& b, OrderFlavor order) {
  return compare_letters(a, b, order) < 0;
}

}  // namespace wreathstat
