#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wreathstat {

/// Raised when a computation would enumerate more group elements than the
/// configured budget allows. Distinct from std::invalid_argument so callers
/// can tell "too big" apart from "malformed".
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t requested, std::uint64_t budget);

  std::uint64_t requested() const { return requested_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t requested_;
  std::uint64_t budget_;
};

}  // namespace wreathstat
