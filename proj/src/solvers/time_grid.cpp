#include "hypns/solvers/time_grid.hpp"

#include <cmath>
#include <stdexcept>

namespace hypns {

TimeGrid::TimeGrid(double T, double dt) : T_(T), dt_(dt), steps_(0) {
  if (!(T >= 0.0) || !std::isfinite(T)) throw std::invalid_argument("time grid: T must be >= 0");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("time grid: dt must be > 0");
  if (T > 0.0) {
    // Absorb a trailing sliver caused by T / dt landing just above an integer.
    const double ratio = T / dt;
    steps_ = static_cast<std::size_t>(std::ceil(ratio - 1e-9 * std::max(1.0, ratio)));
    if (steps_ == 0) steps_ = 1;
  }
}

double TimeGrid::time(std::size_t i) const {
  if (i >= steps_) return T_;
  return static_cast<double>(i) * dt_;
}

bool TimeGrid::is_sample(std::size_t i, std::size_t stride) const {
  if (i == 0 || i == steps_) return true;
  return stride > 0 && i % stride == 0;
}

}  // namespace hypns
