#pragma once

#include <cstddef>
#include <functional>

#include "hypns/solvers/time_grid.hpp"
#include "hypns/spectral/spectral_field.hpp"

namespace hypns {

/// Navier-Stokes state; the pressure is eliminated by the Leray projection.
struct NsState {
  SpectralField v;
  double t = 0.0;
};

/// Multiplies each mode by exp(-|k|^2 tau). Throws for tau < 0.
SpectralField heat_propagate(const SpectralField& f, double tau);

/// Projected, dealiased nonlinearity P div(v (x) v) without the divergence
/// check that convection_term performs.
SpectralField projected_nonlinearity(const SpectralField& v);

/// One integrating-factor RK4 step of dv/dt = Lap v - P div(v (x) v).
/// Throws NumericalError if the result is not finite.
NsState ns_step(const NsState& state, double dt);

/// Time derivative Lap v - P div(v (x) v) of a state.
SpectralField dt_v(const SpectralField& v);
inline SpectralField dt_v(const NsState& state) { return dt_v(state.v); }

/// min(1e-3, 0.5 / (n max|v|)): advective limit with safety factor 1/2.
double default_time_step(const SpectralField& v);

using NsObserver = std::function<void(const NsState&, const StepInfo&)>;

/// Integrates from v0 to time T. The observer, if set, runs after every step
/// (and once for the initial state) with StepInfo::sample marking the sample
/// times of the grid. dt <= 0 selects default_time_step(v0).
NsState ns_solve(const SpectralField& v0, double T, double dt, const NsObserver& observer = {},
                 std::size_t sample_stride = 1);

}  // namespace hypns
