#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hypns {

/// Least-squares fit of log(value) = intercept + slope * log(eps).
struct RateFit {
  bool defined = false;  // false with fewer than two usable points
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  std::size_t points = 0;
  std::vector<std::string> warnings;  // one per excluded nonpositive value
};

/// Nonpositive or non-finite values are skipped with a warning. A fit with no
/// residual reports R^2 = 1, including the constant case.
RateFit fit_rate(std::span<const double> eps, std::span<const double> values);

}  // namespace hypns
