#pragma once

#include <cstddef>

namespace hypns {

/// Uniform time grid on [0, T] with step dt; the last step is shortened so the
/// grid ends exactly at T. Times are computed as i * dt, never accumulated, so
/// two solvers on the same (T, dt) visit bit-identical times.
class TimeGrid {
 public:
  /// Throws std::invalid_argument unless T >= 0 and dt > 0.
  TimeGrid(double T, double dt);

  double horizon() const { return T_; }
  double nominal_step() const { return dt_; }
  std::size_t steps() const { return steps_; }
  double time(std::size_t i) const;
  /// Length of step i, from time(i) to time(i + 1).
  double step(std::size_t i) const { return time(i + 1) - time(i); }
  /// Step 0, every multiple of the stride, and the final step are samples.
  bool is_sample(std::size_t i, std::size_t stride) const;

 private:
  double T_;
  double dt_;
  std::size_t steps_;
};

/// Passed to solver observers after each step.
struct StepInfo {
  std::size_t index = 0;  // number of steps taken so far
  bool sample = false;    // true at the configured sample times
};

}  // namespace hypns
