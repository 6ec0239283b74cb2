#include "hypns/experiment/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hypns/errors.hpp"
#include "hypns/solvers/ns_solver.hpp"
#include "hypns/solvers/nlw_solver.hpp"

namespace hypns {

namespace {

// Runs task(i) for i in [0, count) on up to `jobs` threads. Results are
// written by index, so the outcome does not depend on scheduling.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& task) {
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(jobs, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          task(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

double time_step_for(const ExperimentConfig& config, const SpectralField& v0) {
  return config.dt > 0.0 ? config.dt : default_time_step(v0);
}

// One relaxation run. With `reference` the Navier-Stokes solution is stepped
// in lockstep on the same time grid and every error quantity is recorded.
SweepRow run_epsilon(const ExperimentConfig& config, const SpectralField& v0, double eps,
                     bool reference, bool force) {
  const int dim = config.dim;
  const DiagnosticsConfig dcfg = make_diagnostics_config(dim, config.delta, config.N, config.threshold_c);
  const double s0 = dcfg.sigma0;

  SweepRow row;
  row.eps = eps;
  TruncatedData data = truncate_initial_data(v0, eps);
  data.u1 = data.u0 * config.u1_scale;
  row.hypotheses = check_hypotheses(data.u0, data.u1, v0, eps, config.s, config.delta, dim,
                                    HypothesisBounds{config.hypothesis_constant, config.o1_bound});
  if (!row.hypotheses.pass && !force) {
    row.message = "initial data fail the admissibility hypotheses; rerun with --force to solve anyway";
    return row;
  }

  const double dt = time_step_for(config, v0);
  const TimeGrid grid(config.T, dt);
  NsState ns{v0, 0.0};
  std::vector<EnergyReport> trajectory;
  trajectory.reserve(grid.steps() + 1);
  double prev_integrand = 0.0, prev_t = 0.0;

  auto observe = [&](const WaveState& state, const StepInfo& info) {
    if (reference && info.index > 0) {
      ns = ns_step(ns, grid.step(info.index - 1));
      ns.t = grid.time(info.index);
    }
    EnergyReport report = energy_report(state, reference ? &ns.v : nullptr, dcfg);
    if (reference) {
      const double err = sobolev_norm(state.u - ns.v, s0);
      row.sup_err_sq = std::max(row.sup_err_sq, err * err);
      row.sup_dafermos = std::max(row.sup_dafermos, report.dafermos);
      const double integrand = eps * inner_product(state.ut, dt_v(ns.v), s0);
      if (info.index > 0) row.cross_term += 0.5 * (state.t - prev_t) * (integrand + prev_integrand);
      prev_integrand = integrand;
      prev_t = state.t;
    }
    trajectory.push_back(report);
    if (info.sample) row.series.push_back(report);
  };

  NlwOptions options;
  options.sample_stride = static_cast<std::size_t>(config.sample_stride);
  options.blowup_factor = config.blowup_factor;
  options.monitor = [&](const WaveState& st) { return composite_energy(st, dcfg); };
  try {
    const NlwOutcome out = nlw_solve(data.u0, data.u1, eps, config.T, dt, observe, options);
    row.blowup = out.blowup;
    row.message = out.message;
  } catch (const NumericalError& e) {
    row.blowup = true;
    row.message = e.what();
  }
  row.solved = true;

  row.audit = energy_decay_audit(trajectory, dcfg, eps, l2_norm(data.u0), sobolev_norm(data.u0, 0.5),
                                 config.max_N);
  row.sup_eps_delta_E = row.audit.sup_eps_delta_energy;
  row.initial_eps_delta_E = std::pow(eps, config.delta) * trajectory.front().e_delta;
  row.first_threshold_violation_t = row.audit.first_threshold_violation;
  return row;
}

std::vector<SweepRow> run_rows(const ExperimentConfig& config, const RunOptions& options,
                               bool reference) {
  const auto problems = validate(config);
  if (!problems.empty()) throw ConfigError(problems);
  const SpectralField v0 = build_initial_field(config);
  std::vector<SweepRow> rows(config.eps_list.size());
  parallel_for(rows.size(), options.jobs, [&](std::size_t i) {
    rows[i] = run_epsilon(config, v0, config.eps_list[i], reference, options.force);
  });
  return rows;
}

}  // namespace

bool SweepResult::rate_ok() const {
  return fit.defined && fit.slope >= 0.5 * config.s - config.rate_tolerance && fit.r2 >= config.min_r2;
}

SpectralField read_field_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open field file");
  int dim = 0, n = 0;
  if (!(in >> dim >> n)) throw std::runtime_error(path + ": expected header 'dim n'");
  const Grid grid = Grid::make(dim, n);
  PhysicalField values(grid, dim);
  for (std::size_t p = 0; p < grid.physical_size(); ++p) {
    for (int c = 0; c < dim; ++c) {
      if (!(in >> values.component(c)[p])) {
        throw std::runtime_error(path + ": expected " + std::to_string(grid.physical_size()) +
                                 " rows of " + std::to_string(dim) + " values, data ended at row " +
                                 std::to_string(p + 1));
      }
    }
  }
  return leray_project(transform(values).field);
}

SpectralField build_initial_field(const ExperimentConfig& config) {
  const Grid grid = Grid::make(config.dim, config.n);
  switch (config.data_source) {
    case DataSource::taylor_green:
      return taylor_green(grid) * config.amplitude;
    case DataSource::file: {
      SpectralField f = read_field_file(config.data_file);
      if (!(f.grid() == grid)) {
        throw std::runtime_error(config.data_file + ": grid does not match dim/n of the config");
      }
      return f;
    }
    case DataSource::synthetic:
      break;
  }
  DataRecipe recipe;
  recipe.seed = config.seed;
  recipe.s = config.s;
  recipe.dim = config.dim;
  recipe.amplitude = config.amplitude;
  return synth_hs_field(recipe, grid);
}

SweepResult run_convergence(const ExperimentConfig& config, const RunOptions& options) {
  SweepResult result;
  result.config = config;
  result.rows = run_rows(config, options, true);
  std::vector<double> eps, err, cross;
  for (const auto& r : result.rows) {
    if (!r.solved || r.blowup) continue;
    eps.push_back(r.eps);
    err.push_back(r.sup_err_sq);
    cross.push_back(std::abs(r.cross_term));
  }
  result.fit = fit_rate(eps, err);
  result.cross_fit = fit_rate(eps, cross);
  return result;
}

ExistenceSummary run_existence_probe(const ExperimentConfig& config, const RunOptions& options) {
  ExistenceSummary summary;
  summary.rows = run_rows(config, options, false);
  bool pass = true;
  for (const auto& r : summary.rows) {
    summary.max_initial_eps_delta_E = std::max(summary.max_initial_eps_delta_E, r.initial_eps_delta_E);
  }
  for (const auto& r : summary.rows) {
    pass = pass && r.solved && !r.blowup && r.audit.smallest_monotone_N >= 0;
    pass = pass && r.sup_eps_delta_E <= 2.0 * summary.max_initial_eps_delta_E;
  }
  summary.pass = pass && !summary.rows.empty();
  return summary;
}

InequalityAuditReport run_inequality_audit(const ExperimentConfig& config, const RunOptions& options) {
  const auto problems = validate(config);
  if (!problems.empty()) throw ConfigError(problems);
  constexpr double kAllowance = 1e-12;
  constexpr double kTrilinearBand = 4.0;
  InequalityAuditReport report;
  report.rows.resize(config.audit_resolutions.size());

  parallel_for(report.rows.size(), options.jobs, [&](std::size_t r) {
    const int n = config.audit_resolutions[r];
    InequalityRow& row = report.rows[r];
    row.n = n;
    row.fields = config.audit_fields;
    const Grid grid = Grid::make(config.dim, n);
    const Grid grid3 = Grid::make(3, n);
    const double s0 = critical_shift(config.dim);
    for (int i = 0; i < config.audit_fields; ++i) {
      const std::uint64_t seed = config.seed * 1000003ULL + static_cast<std::uint64_t>(i);

      const SpectralField f = random_band_field(grid, seed, grid.dealias_cutoff());
      const auto ratios = interpolation_ratios(f, config.delta);
      row.max_gagliardo_nirenberg = std::max(row.max_gagliardo_nirenberg, ratios.at("gagliardo_nirenberg"));
      row.max_hdelta = std::max(row.max_hdelta, ratios.at("hdelta"));
      row.max_half_plus_delta = std::max(row.max_half_plus_delta, ratios.at("half_plus_delta"));
      row.max_linf_besov = std::max(row.max_linf_besov, ratios.at("linf_besov"));

      DataRecipe recipe;
      recipe.seed = seed;
      recipe.s = config.s;
      recipe.dim = config.dim;
      const SpectralField v0 = synth_hs_field(recipe, grid);
      // eps log-uniform between the band edge and 1, so truncation is active.
      const double kc = grid.dealias_cutoff();
      const double eps = std::exp(std::log(1.0 / (kc * kc)) * hash_uniform(seed, 7));
      const SpectralField u0 = truncate_initial_data(v0, eps).u0;
      const double sigma = config.s + hash_uniform(seed, 11) * 1.5;
      row.max_bernstein = std::max(row.max_bernstein, check_bernstein(v0, u0, eps, sigma, config.s));
      row.max_jackson = std::max(row.max_jackson, check_jackson(v0, u0, eps, config.s, s0));

      row.max_trilinear =
          std::max(row.max_trilinear, trilinear_ratio(random_band_field(grid3, seed, kTrilinearBand)));
    }
  });

  double lo = 0.0, hi = 0.0;
  bool pass = !report.rows.empty();
  for (std::size_t r = 0; r < report.rows.size(); ++r) {
    const auto& row = report.rows[r];
    lo = r == 0 ? row.max_trilinear : std::min(lo, row.max_trilinear);
    hi = std::max(hi, row.max_trilinear);
    pass = pass && row.max_gagliardo_nirenberg <= 1.0 + kAllowance && row.max_hdelta <= 1.0 + kAllowance &&
           row.max_half_plus_delta <= 1.0 + kAllowance && row.max_bernstein <= 1.0 + kAllowance &&
           row.max_jackson <= 1.0 + kAllowance && row.max_trilinear <= config.trilinear_bound;
  }
  report.trilinear_spread = hi > 0.0 ? (hi - lo) / hi : 0.0;
  report.pass = pass && report.trilinear_spread <= 0.1;
  return report;
}

}  // namespace hypns

namespace hypns {

TaylorGreenRegression run_taylor_green_regression() {
  TaylorGreenRegression out;
  {
    const Grid grid = Grid::make(2, 64);
    const SpectralField tg = taylor_green(grid);
    const double T = 0.5;
    const NsState final_state = ns_solve(tg, T, 1e-3);
    const PhysicalField got = inverse_transform(final_state.v);
    const PhysicalField want = inverse_transform(tg * std::exp(-2.0 * T));
    for (int c = 0; c < 2; ++c) {
      for (std::size_t p = 0; p < grid.physical_size(); ++p) {
        out.ns_linf_error = std::max(out.ns_linf_error, std::abs(got.component(c)[p] - want.component(c)[p]));
      }
    }
    out.ns_pass = out.ns_linf_error <= 1e-8;
  }
  {
    const Grid grid = Grid::make(2, 32);
    const SpectralField tg = taylor_green(grid);
    const double eps = 0.05, T = 1.0, k2 = 2.0;
    const NlwOutcome run = nlw_solve(tg, SpectralField::zeros_like(tg), eps, T, 1e-3);
    // u'' + u'/eps + k2 u / eps = 0 with u(0) = 1, u'(0) = 0 and real roots.
    const double root = std::sqrt(1.0 - 4.0 * eps * k2);
    const double lp = (-1.0 + root) / (2.0 * eps), lm = (-1.0 - root) / (2.0 * eps);
    const double amp = (lp * std::exp(lm * T) - lm * std::exp(lp * T)) / (lp - lm);
    const double damp = lp * lm * (std::exp(lm * T) - std::exp(lp * T)) / (lp - lm);
    const SpectralField du = run.state.u - tg * amp;
    const SpectralField dv = run.state.ut - tg * damp;
    for (int c = 0; c < 2; ++c) {
      for (std::size_t m = 0; m < grid.spectral_size(); ++m) {
        out.nlw_mode_error = std::max({out.nlw_mode_error, std::abs(du.component(c)[m]),
                                       std::abs(dv.component(c)[m])});
      }
    }
    out.nlw_pass = !run.blowup && out.nlw_mode_error <= 1e-8;
  }
  return out;
}

}  // namespace hypns
