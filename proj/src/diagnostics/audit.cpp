#include <cmath>
#include <stdexcept>

#include "hypns/diagnostics.hpp"

namespace hypns {

namespace {

bool rises(double before, double after, double tolerance) {
  return after > before * (1.0 + tolerance);
}

// Sample indices where the composite energy with exponent N rises by more than
// the tolerance, considering only steps that stay under the L-infinity threshold.
std::vector<std::size_t> composite_rises(std::span<const EnergyReport> traj, int N, double tol) {
  std::vector<std::size_t> out;
  double prev = composite_from_parts(traj[0].e_delta, traj[0].e_base, N);
  for (std::size_t i = 1; i < traj.size(); ++i) {
    const double cur = composite_from_parts(traj[i].e_delta, traj[i].e_base, N);
    if (traj[i - 1].threshold_ok && traj[i].threshold_ok && rises(prev, cur, tol)) out.push_back(i);
    prev = cur;
  }
  return out;
}

}  // namespace

EnergyAudit energy_decay_audit(std::span<const EnergyReport> trajectory,
                               const DiagnosticsConfig& config, double eps, double u0_l2,
                               double u0_half, int max_N) {
  if (trajectory.empty()) throw std::invalid_argument("energy_decay_audit: empty trajectory");
  const double tol = config.monotone_tolerance;
  EnergyAudit audit;

  audit.composite_violations = composite_rises(trajectory, config.N, tol);
  audit.composite_monotone = audit.composite_violations.empty();
  for (int N = 0; N <= max_N; ++N) {
    if (composite_rises(trajectory, N, tol).empty()) {
      audit.smallest_monotone_N = N;
      break;
    }
  }

  const int growth_N = audit.smallest_monotone_N >= 0 ? audit.smallest_monotone_N : config.N;
  const double growth_bound =
      trajectory[0].e_delta * std::pow(2.0 * u0_l2 * u0_l2 + 1.0, growth_N) * (1.0 + tol);
  const double eps_delta = std::pow(eps, config.delta);
  for (const auto& r : trajectory) {
    audit.sup_eps_delta_energy = std::max(audit.sup_eps_delta_energy, eps_delta * r.e_delta);
    if (r.e_delta > growth_bound) audit.growth_bound_held = false;
    if (!r.threshold_ok && !audit.first_threshold_violation) audit.first_threshold_violation = r.t;
  }

  if (config.sigma0 == 0.5 && u0_half < 1.0 / 16.0) {
    audit.base_monotone_checked = true;
    for (std::size_t i = 1; i < trajectory.size(); ++i) {
      if (rises(trajectory[i - 1].e_base, trajectory[i].e_base, tol)) audit.base_monotone = false;
    }
  }
  return audit;
}

double trapezoid(std::span<const double> t, std::span<const double> values) {
  if (t.size() != values.size()) throw std::invalid_argument("trapezoid: size mismatch");
  double total = 0.0;
  for (std::size_t i = 1; i < t.size(); ++i) total += 0.5 * (t[i] - t[i - 1]) * (values[i] + values[i - 1]);
  return total;
}

double epsilon_dt_cross_term(std::span<const double> times, std::span<const SpectralField> ut,
                             std::span<const SpectralField> vt, double eps, double sigma0) {
  if (times.size() != ut.size() || times.size() != vt.size()) {
    throw std::invalid_argument("epsilon_dt_cross_term: sample sequences are not aligned");
  }
  std::vector<double> integrand(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) integrand[i] = eps * inner_product(ut[i], vt[i], sigma0);
  return trapezoid(times, integrand);
}

}  // namespace hypns
