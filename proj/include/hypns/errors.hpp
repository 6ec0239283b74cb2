#pragma once

#include <stdexcept>
#include <string>

namespace hypns {

/// Raised when a solver produces NaN or infinite values.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double time)
      : std::runtime_error(what + " at t = " + std::to_string(time)), time_(time) {}
  double time() const { return time_; }

 private:
  double time_;
};

}  // namespace hypns
