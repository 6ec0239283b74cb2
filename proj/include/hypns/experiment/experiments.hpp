#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypns/diagnostics.hpp"
#include "hypns/experiment/config.hpp"
#include "hypns/experiment/fit.hpp"
#include "hypns/initial_data.hpp"

namespace hypns {

struct RunOptions {
  int jobs = 1;
  bool force = false;  // solve even when the data fail the hypotheses
};

/// Outcome of one relaxation parameter in a sweep or probe.
struct SweepRow {
  double eps = 0.0;
  bool solved = false;          // false when skipped by the hypothesis gate
  bool blowup = false;
  std::string message;          // blow-up or numerical failure details
  double sup_err_sq = 0.0;      // sup_t |u - v|^2 in L2 (2D) or H^{1/2}-dot (3D)
  double sup_dafermos = 0.0;
  double sup_eps_delta_E = 0.0; // sup_t eps^delta E^{s0+delta}
  double initial_eps_delta_E = 0.0;
  double cross_term = 0.0;      // eps int <Lambda^s0 u_t, Lambda^s0 v_t>
  std::optional<double> first_threshold_violation_t;
  HypothesisReport hypotheses;
  EnergyAudit audit;
  std::vector<EnergyReport> series;  // sampled rows for energies_<eps>.csv
};

struct SweepResult {
  ExperimentConfig config;
  std::vector<SweepRow> rows;  // in the order of config.eps_list
  RateFit fit;                 // sup_err_sq against eps
  RateFit cross_fit;           // |cross_term| against eps
  /// Fitted slope >= s/2 - rate_tolerance and R^2 >= min_r2.
  bool rate_ok() const;
};

/// Initial NS data for a config (synthetic, Taylor-Green or file).
SpectralField build_initial_field(const ExperimentConfig& config);

/// Reads a field file: first line "dim n", then n^dim lines of dim reals in
/// row-major order (last axis fastest). The field is Leray-projected and its
/// mean removed.
SpectralField read_field_file(const std::string& path);

/// Convergence sweep over config.eps_list.
SweepResult run_convergence(const ExperimentConfig& config, const RunOptions& options = {});

/// Existence probe: the same per-eps runs without the reference solution.
struct ExistenceSummary {
  std::vector<SweepRow> rows;
  double max_initial_eps_delta_E = 0.0;
  /// No blow-up, every row solved, sup eps^delta E bounded by twice the
  /// largest initial value, and a monotone composite exponent found.
  bool pass = false;
};
ExistenceSummary run_existence_probe(const ExperimentConfig& config, const RunOptions& options = {});

/// Per-resolution maxima of the inequality ratios over random fields.
struct InequalityRow {
  int n = 0;
  int fields = 0;
  double max_gagliardo_nirenberg = 0.0;
  double max_hdelta = 0.0;
  double max_half_plus_delta = 0.0;
  double max_linf_besov = 0.0;  // reported only
  double max_bernstein = 0.0;
  double max_jackson = 0.0;
  double max_trilinear = 0.0;   // 3D fields
};
struct InequalityAuditReport {
  std::vector<InequalityRow> rows;
  double trilinear_spread = 0.0;  // (max - min) / max over resolutions
  bool pass = false;
};
InequalityAuditReport run_inequality_audit(const ExperimentConfig& config,
                                           const RunOptions& options = {});

/// Built-in regression on the Taylor-Green vortex, whose projected
/// nonlinearity vanishes: Navier-Stokes against TG e^{-2t} (n = 64, dt = 1e-3,
/// T = 0.5, pointwise tolerance 1e-8) and the relaxation against the damped
/// oscillator closed form (eps = 0.05, T = 1, dt = 1e-3, per-mode tolerance 1e-8).
struct TaylorGreenRegression {
  double ns_linf_error = 0.0;
  double nlw_mode_error = 0.0;
  bool ns_pass = false;
  bool nlw_pass = false;
};
TaylorGreenRegression run_taylor_green_regression();

}  // namespace hypns
