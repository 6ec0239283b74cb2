#include "hypns/solvers/ns_solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hypns/errors.hpp"
#include "hypns/spectral/operators.hpp"

namespace hypns {

namespace {

// Per-mode exp(-|k|^2 tau) with the zero mode mapped to 1.
std::vector<double> heat_factors(const Grid& grid, double tau) {
  std::vector<double> e(grid.spectral_size());
  for (std::size_t m = 0; m < e.size(); ++m) e[m] = std::exp(-grid.k2(m) * tau);
  return e;
}

void scale_modes(SpectralField& f, const std::vector<double>& e) {
  for (int c = 0; c < f.components(); ++c) {
    auto comp = f.component(c);
    for (std::size_t m = 0; m < comp.size(); ++m) comp[m] *= e[m];
  }
}

}  // namespace

SpectralField heat_propagate(const SpectralField& f, double tau) {
  if (!(tau >= 0.0)) throw std::invalid_argument("heat_propagate: tau must be >= 0");
  SpectralField out = f;
  if (tau == 0.0) return out;
  scale_modes(out, heat_factors(f.grid(), tau));
  return out;
}

SpectralField projected_nonlinearity(const SpectralField& v) {
  return dealias(leray_project(tensor_divergence(v)));
}

NsState ns_step(const NsState& state, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("ns_step: dt must be > 0");
  const Grid& grid = state.v.grid();
  const auto e_half = heat_factors(grid, 0.5 * dt);
  auto E = [&](SpectralField f) {
    scale_modes(f, e_half);
    return f;
  };
  const SpectralField& v = state.v;
  const SpectralField k1 = projected_nonlinearity(v) * -1.0;
  const SpectralField ev = E(v);
  SpectralField a = E(v + k1 * (0.5 * dt));
  const SpectralField k2 = projected_nonlinearity(a) * -1.0;
  a = ev;
  a.axpy(0.5 * dt, k2);
  const SpectralField k3 = projected_nonlinearity(a) * -1.0;
  a = E(ev);
  a.axpy(dt, E(k3));
  const SpectralField k4 = projected_nonlinearity(a) * -1.0;

  SpectralField inc = E(E(k1));
  inc.axpy(2.0, E(k2 + k3));
  inc += k4;
  NsState next{E(ev), state.t + dt};
  next.v.axpy(dt / 6.0, inc);
  next.v = dealias(next.v);
  if (next.v.has_nonfinite()) throw NumericalError("ns_step produced non-finite values", next.t);
  return next;
}

SpectralField dt_v(const SpectralField& v) {
  SpectralField out = laplacian(v);
  out -= projected_nonlinearity(v);
  return out;
}

double default_time_step(const SpectralField& v) {
  const double vmax = linf_norm(v);
  if (vmax <= 0.0) return 1e-3;
  return std::min(1e-3, 0.5 / (static_cast<double>(v.grid().n()) * vmax));
}

NsState ns_solve(const SpectralField& v0, double T, double dt, const NsObserver& observer,
                 std::size_t sample_stride) {
  if (dt <= 0.0) dt = default_time_step(v0);
  const TimeGrid grid(T, dt);
  NsState state{v0, 0.0};
  if (observer) observer(state, StepInfo{0, true});
  for (std::size_t i = 0; i < grid.steps(); ++i) {
    state = ns_step(state, grid.step(i));
    state.t = grid.time(i + 1);
    if (observer) observer(state, StepInfo{i + 1, grid.is_sample(i + 1, sample_stride)});
  }
  return state;
}

}  // namespace hypns
