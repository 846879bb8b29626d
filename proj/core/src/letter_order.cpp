#include "wreathstat/letter_order.hpp"

#include <stdexcept>
#include <tuple>

#include "wreathstat/errors.hpp"

namespace wreathstat {

BudgetExceeded::BudgetExceeded(std::uint64_t requested, std::uint64_t budget)
    : std::runtime_error("group of size " + std::to_string(requested) +
                         " exceeds the enumeration budget of " + std::to_string(budget)),
      requested_(requested),
      budget_(budget) {}

std::string_view to_string(OrderFlavor f) {
  switch (f) {
    case OrderFlavor::wreath: return "wreath";
    case OrderFlavor::steingrimsson: return "steingrimsson";
    case OrderFlavor::natural: return "natural";
    case OrderFlavor::naturalD: return "naturalD";
  }
  return "?";
}

OrderFlavor order_flavor_from_string(std::string_view s) {
  if (s == "wreath") return OrderFlavor::wreath;
  if (s == "steingrimsson") return OrderFlavor::steingrimsson;
  if (s == "natural") return OrderFlavor::natural;
  if (s == "naturalD") return OrderFlavor::naturalD;
  throw std::invalid_argument("unknown order flavor '" + std::string(s) + "'");
}

namespace {

std::pair<int, int> sort_key(const Letter& l, OrderFlavor order) {
  switch (order) {
    case OrderFlavor::wreath: return {-l.color, l.value};
    case OrderFlavor::steingrimsson: return {l.color, l.value};
    case OrderFlavor::natural: return {0, signed_value(l)};
    case OrderFlavor::naturalD:
      // sentinel 0 sits between the two blocks, like in the natural order
      if (l.value == 0) return {1, 0};
      return l.color != 0 ? std::pair{0, l.value} : std::pair{2, l.value};
  }
  return {0, 0};
}

}  // namespace

std::strong_ordering compare_letters(const Letter& a, const Letter& b, OrderFlavor order) {
  return sort_key(a, order) <=> sort_key(b, order);
}

}  // namespace wreathstat
