#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <string>

#include "hypns/solvers/time_grid.hpp"
#include "hypns/spectral/spectral_field.hpp"

namespace hypns {

/// State of the damped wave relaxation eps u_tt + u_t - Lap u = -P div(u (x) u).
struct WaveState {
  SpectralField u;
  SpectralField ut;
  double eps = 1.0;
  double t = 0.0;
};

enum class RootKind { real_distinct, double_root, complex_pair };

/// Roots of eps l^2 + l + k2 = 0.
struct ModeRoots {
  RootKind kind = RootKind::real_distinct;
  std::complex<double> lambda_plus;   // slow root, tends to -k2 as eps -> 0
  std::complex<double> lambda_minus;  // fast root, about -1/eps
  double discriminant = 1.0;          // 1 - 4 eps k2
};

/// Cancellation-free roots; the kind is decided with tolerance 1e-14 on the
/// discriminant. Throws for eps <= 0 or k2 < 0.
ModeRoots mode_roots(double eps, double k2);

/// Fundamental solution of one mode over time t:
///   u(t)  = phi0 u(0) + phi1 u_t(0)
///   u_t(t) = psi0 u(0) + psi1 u_t(0)
struct ModePropagator {
  double phi0 = 1.0, phi1 = 0.0;
  double psi0 = 0.0, psi1 = 1.0;
};

/// Exact propagator of eps u'' + u' + k2 u = 0. Uses a power series in
/// (1 - 4 eps k2) t^2 / (4 eps^2) when that quantity is below 1e-2 in
/// magnitude, so the formula is smooth across the double-root locus.
ModePropagator mode_propagator(double eps, double k2, double t);

/// Exact evolution of the linear part over dt >= 0.
WaveState linear_propagate(const WaveState& state, double dt);

/// One second-order exponential Runge-Kutta step (midpoint stage) with the
/// linear part solved exactly. Throws NumericalError on non-finite output.
WaveState nlw_step(const WaveState& state, double dt);

using WaveObserver = std::function<void(const WaveState&, const StepInfo&)>;
/// Scalar monitored for blow-up, typically the composite energy.
using BlowupMonitor = std::function<double(const WaveState&)>;

struct NlwOptions {
  std::size_t sample_stride = 1;
  BlowupMonitor monitor;
  double blowup_factor = 1e6;
};

struct NlwOutcome {
  WaveState state;
  bool blowup = false;
  double blowup_time = 0.0;
  std::string message;
};

/// Integrates (u0, u1) to time T with the step grid TimeGrid(T, dt). The
/// observer runs for the initial state and after each step. If the monitor
/// exceeds blowup_factor times its initial value the run stops early and the
/// outcome is flagged; non-finite values throw NumericalError.
NlwOutcome nlw_solve(const SpectralField& u0, const SpectralField& u1, double eps, double T,
                     double dt, const WaveObserver& observer = {}, const NlwOptions& options = {});

enum class RescaleDirection { to_unit, from_unit };

/// Change of variables u_eps(t, y) = eps^{-1/2} U(t / eps, y / sqrt(eps))
/// between the relaxation with parameter eps and the one with parameter 1.
/// Only eps = 1/m^2 with integer m maps the lattice onto itself; other values
/// throw std::invalid_argument. from_unit takes a state with eps = 1 to the
/// eps-system (mode k -> m k); to_unit is its inverse and requires the state
/// to be supported on m Z^d.
WaveState rescale(const WaveState& state, RescaleDirection direction, double eps);

}  // namespace hypns
