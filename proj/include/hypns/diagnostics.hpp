#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypns/solvers/nlw_solver.hpp"
#include "hypns/spectral/operators.hpp"
#include "hypns/spectral/spectral_field.hpp"

namespace hypns {

struct DiagnosticsConfig {
  double delta = 0.5;
  double sigma0 = 0.0;          // 0 in 2D, 1/2 in 3D
  int N = 1;                    // exponent of the composite energy
  double threshold_c = 1.0;     // L-infinity threshold is 1 / (c sqrt(eps))
  std::size_t sample_stride = 1;
  double monotone_tolerance = 1e-7;  // relative, per step
};

/// Config with sigma0 matched to the dimension. Throws unless 0 < delta < 1,
/// N >= 0, c > 0 and dim is 2 or 3.
DiagnosticsConfig make_diagnostics_config(int dim, double delta, int N, double threshold_c);

/// Wave energy with Lambda exponent sigma:
///   1/2 |u + eps u_t|^2_sigma + eps^2/2 |u_t|^2_sigma + eps |u|^2_{sigma+1}.
double energy(const WaveState& state, double sigma);

/// e_delta (1 + e_base)^N, evaluated through logarithms so large N does not
/// overflow before the final exponentiation.
double composite_from_parts(double e_delta, double e_base, int N);
double composite_energy(const WaveState& state, const DiagnosticsConfig& config);

/// Modulated energy of (u, u_t) against the reference field v:
///   1/2 |u - v + eps u_t|^2_s0 + eps^2/2 |u_t|^2_s0 + eps |grad u|^2_s0.
double dafermos_energy(const WaveState& state, const SpectralField& v, double sigma0);

/// Terms of the time derivative of the modulated energy with w = u - v,
/// B(f) = P div(f (x) f) and R = v_t + B(v) - Lap v. All products carry the
/// Lambda^{2 sigma0} weight.
struct DafermosRhs {
  double dissipation = 0.0;     // -|grad w|^2
  double transport = 0.0;       // -<B(u) - B(v), w>
  double damping = 0.0;         // -eps |u_t|^2
  double nonlinear_work = 0.0;  // -2 eps <u_t, B(u)>
  double cross = 0.0;           // -eps <v_t, u_t>
  double forcing = 0.0;         // <R, v - u>, zero when v solves Navier-Stokes
  double total(bool include_forcing) const {
    return dissipation + transport + damping + nonlinear_work + cross +
           (include_forcing ? forcing : 0.0);
  }
};

DafermosRhs dafermos_rhs(const WaveState& state, const SpectralField& v, const SpectralField& vt,
                         double sigma0);

/// |(E(t+h) - E(t-h)) / 2h - RHS(t)| from three equally spaced samples.
/// vt_center defaults to the Navier-Stokes time derivative of v[1].
/// Throws std::invalid_argument for non-uniform spacing.
double dafermos_derivative_residual(const std::array<WaveState, 3>& u,
                                    const std::array<SpectralField, 3>& v, double sigma0,
                                    const SpectralField* vt_center = nullptr,
                                    bool include_forcing = false);

struct ThresholdCheck {
  double value = 0.0;
  double bound = 0.0;
  bool ok = true;
};

/// Compares |u|_inf with 1 / (c sqrt(eps)).
ThresholdCheck linf_threshold(const WaveState& state, double c);
ThresholdCheck linf_threshold(double linf, double eps, double c);

/// |<Lambda f, div(f (x) f)>| / (|f|_{1/2} |f|_{3/2}^2) for a 3D divergence-free
/// field; 0 for the zero field. Throws for 2D input.
double trilinear_ratio(const SpectralField& f);

/// Left-over-right ratios of the interpolation inequalities:
///   gagliardo_nirenberg   |f|_1^2 / (|f|_{1/2} |f|_{3/2})
///   hdelta                |f|_d / (|f|_0^{1-d} |f|_1^d)
///   half_plus_delta       |f|_{1/2+d} / (|f|_{1/2}^{1-d} |f|_{3/2}^d)
///   linf_besov            |f|_inf / (|f|_{s0+d}^d |f|_{s0+1+d}^{1-d})   (reported only)
/// where |.|_a is the homogeneous H^a norm. All are 0 for the zero field.
std::map<std::string, double> interpolation_ratios(const SpectralField& f, double delta);

/// One row of the energy time series.
struct EnergyReport {
  double t = 0.0;
  double e_base = 0.0;
  double e_delta = 0.0;
  double composite = 0.0;
  double dafermos = 0.0;
  double linf = 0.0;
  bool threshold_ok = true;
  NormSet u_norms;
  NormSet ut_norms;
  NormSet error_norms;
};

/// Evaluates every energy of a state; v may be null, in which case the
/// modulated energy and error norms are left at zero.
EnergyReport energy_report(const WaveState& state, const SpectralField* v,
                           const DiagnosticsConfig& config, bool with_norms = false);

struct EnergyAudit {
  bool composite_monotone = true;
  std::vector<std::size_t> composite_violations;  // sample indices i with a rise from i-1
  int smallest_monotone_N = -1;                   // -1 if none up to the scan limit
  double sup_eps_delta_energy = 0.0;              // sup_t eps^delta e_delta
  bool growth_bound_held = true;                  // e_delta(t) <= e_delta(0)(2|u0|^2 + 1)^N
  std::optional<double> first_threshold_violation;
  bool base_monotone_checked = false;  // 3D small-data case only
  bool base_monotone = true;
};

/// Audits a trajectory of energy reports (consecutive entries are adjacent
/// steps). Throws std::invalid_argument for an empty trajectory.
EnergyAudit energy_decay_audit(std::span<const EnergyReport> trajectory,
                               const DiagnosticsConfig& config, double eps, double u0_l2,
                               double u0_half = 0.0, int max_N = 64);

/// Trapezoidal rule on possibly non-uniform abscissae.
double trapezoid(std::span<const double> t, std::span<const double> values);

/// eps * int_0^T <Lambda^{s0} u_t, Lambda^{s0} v_t> dt by the trapezoidal
/// rule over aligned samples. Throws std::invalid_argument on size mismatch.
double epsilon_dt_cross_term(std::span<const double> times, std::span<const SpectralField> ut,
                             std::span<const SpectralField> vt, double eps, double sigma0);

}  // namespace hypns
