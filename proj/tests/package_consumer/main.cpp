#include <wreathstat/wreathstat.hpp>

int main() {
  auto g = wreathstat::parse_window("[1^3 4^0 2^1 3^0 6^2 5^1]", 4);
  return wreathstat::ndes(g) == 11 && wreathstat::nmajor(g) == 40 ? 0 : 1;
}
