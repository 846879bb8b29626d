#include <iostream>

#include "wreathstat_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wreathstat::cli::run(std::move(args), std::cout, std::cerr);
}
