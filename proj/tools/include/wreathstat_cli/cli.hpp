#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wreathstat::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kUsage = 2,
  kBudget = 3,
};

/// Runs one command line. `args` excludes the program name.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace wreathstat::cli
