#include <cmath>
#include <stdexcept>

#include "hypns/diagnostics.hpp"
#include "hypns/solvers/ns_solver.hpp"

namespace hypns {

DiagnosticsConfig make_diagnostics_config(int dim, double delta, int N, double threshold_c) {
  if (dim != 2 && dim != 3) throw std::invalid_argument("diagnostics: dim must be 2 or 3");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("diagnostics: delta must lie in (0, 1)");
  if (N < 0) throw std::invalid_argument("diagnostics: N must be >= 0");
  if (!(threshold_c > 0.0)) throw std::invalid_argument("diagnostics: threshold constant must be > 0");
  DiagnosticsConfig config;
  config.delta = delta;
  config.sigma0 = dim == 3 ? 0.5 : 0.0;
  config.N = N;
  config.threshold_c = threshold_c;
  return config;
}

double energy(const WaveState& state, double sigma) {
  SpectralField a = state.u;
  a.axpy(state.eps, state.ut);
  const double eps = state.eps;
  return 0.5 * inner_product(a, a, sigma) + 0.5 * eps * eps * inner_product(state.ut, state.ut, sigma) +
         eps * inner_product(state.u, state.u, sigma + 1.0);
}

double composite_from_parts(double e_delta, double e_base, int N) {
  if (e_delta <= 0.0) return 0.0;
  return std::exp(std::log(e_delta) + static_cast<double>(N) * std::log1p(e_base));
}

double composite_energy(const WaveState& state, const DiagnosticsConfig& config) {
  return composite_from_parts(energy(state, config.sigma0 + config.delta),
                              energy(state, config.sigma0), config.N);
}

double dafermos_energy(const WaveState& state, const SpectralField& v, double sigma0) {
  SpectralField a = state.u - v;
  a.axpy(state.eps, state.ut);
  const double eps = state.eps;
  return 0.5 * inner_product(a, a, sigma0) +
         0.5 * eps * eps * inner_product(state.ut, state.ut, sigma0) +
         eps * inner_product(state.u, state.u, sigma0 + 1.0);
}

DafermosRhs dafermos_rhs(const WaveState& state, const SpectralField& v, const SpectralField& vt,
                         double sigma0) {
  const double eps = state.eps;
  const SpectralField w = state.u - v;
  const SpectralField bu = projected_nonlinearity(state.u);
  const SpectralField bv = projected_nonlinearity(v);
  DafermosRhs rhs;
  rhs.dissipation = -inner_product(w, w, sigma0 + 1.0);
  rhs.transport = -inner_product(bu - bv, w, sigma0);
  rhs.damping = -eps * inner_product(state.ut, state.ut, sigma0);
  rhs.nonlinear_work = -2.0 * eps * inner_product(state.ut, bu, sigma0);
  rhs.cross = -eps * inner_product(vt, state.ut, sigma0);
  const SpectralField residual = vt + bv - laplacian(v);
  rhs.forcing = -inner_product(residual, w, sigma0);
  return rhs;
}

double dafermos_derivative_residual(const std::array<WaveState, 3>& u,
                                    const std::array<SpectralField, 3>& v, double sigma0,
                                    const SpectralField* vt_center, bool include_forcing) {
  const double h0 = u[1].t - u[0].t;
  const double h1 = u[2].t - u[1].t;
  if (!(h0 > 0.0) || std::abs(h1 - h0) > 1e-9 * h0) {
    throw std::invalid_argument("dafermos_derivative_residual: samples must be equally spaced");
  }
  const double e_minus = dafermos_energy(u[0], v[0], sigma0);
  const double e_plus = dafermos_energy(u[2], v[2], sigma0);
  const double derivative = (e_plus - e_minus) / (h0 + h1);
  const SpectralField vt = vt_center ? *vt_center : dt_v(v[1]);
  return std::abs(derivative - dafermos_rhs(u[1], v[1], vt, sigma0).total(include_forcing));
}

ThresholdCheck linf_threshold(double linf, double eps, double c) {
  if (!(c > 0.0) || !(eps > 0.0)) throw std::invalid_argument("linf_threshold: c and eps must be > 0");
  ThresholdCheck check;
  check.value = linf;
  check.bound = 1.0 / (c * std::sqrt(eps));
  check.ok = linf < check.bound;
  return check;
}

ThresholdCheck linf_threshold(const WaveState& state, double c) {
  return linf_threshold(linf_norm(state.u), state.eps, c);
}

EnergyReport energy_report(const WaveState& state, const SpectralField* v,
                           const DiagnosticsConfig& config, bool with_norms) {
  EnergyReport r;
  r.t = state.t;
  r.e_base = energy(state, config.sigma0);
  r.e_delta = energy(state, config.sigma0 + config.delta);
  r.composite = composite_from_parts(r.e_delta, r.e_base, config.N);
  r.linf = linf_norm(state.u);
  r.threshold_ok = linf_threshold(r.linf, state.eps, config.threshold_c).ok;
  if (v) r.dafermos = dafermos_energy(state, *v, config.sigma0);
  if (with_norms) {
    const double sigmas[] = {config.sigma0, config.sigma0 + config.delta, config.sigma0 + 1.0};
    r.u_norms = compute_norms(state.u, sigmas);
    r.ut_norms = compute_norms(state.ut, sigmas);
    if (v) r.error_norms = compute_norms(state.u - *v, sigmas);
  }
  return r;
}

}  // namespace hypns
