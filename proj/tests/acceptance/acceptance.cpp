// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hypns/diagnostics.hpp"
#include "hypns/experiment/experiments.hpp"
#include "hypns/experiment/report.hpp"
#include "hypns/initial_data.hpp"
#include "hypns/solvers/nlw_solver.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hypns;

namespace {

// Pinned tolerances.
constexpr double kTaylorGreenTol = 1e-8;
constexpr double kTaylorGreenSeconds = 30.0;
constexpr double kModeTol = 1e-10;
constexpr int kModeTriples = 1000;
constexpr double kRate2dMinSlope = 0.15;
constexpr double kRate2dMinR2 = 0.9;
constexpr double kRate2dSeconds = 600.0;
constexpr double kRate3dSlopeMargin = 0.15;
constexpr double kRate3dSeconds = 900.0;
constexpr double kSmallData3d = 1.0 / 16.0;
constexpr double kGlobalFactor = 2.0;
constexpr int kAlgebraStates = 500;
constexpr double kGnSlack = 1e-12;
constexpr double kResidualRatioLow = 3.5, kResidualRatioHigh = 4.5;
constexpr int kTrilinearFields = 500;
constexpr double kTrilinearSpread = 0.10;
// Largest ratio observed over the 500 seeded band-limited fields (6.822e-5),
// plus 10%.
constexpr double kTrilinearBound = 7.5e-5;
constexpr int kParallelJobs = 4;

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c, d);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

ExperimentConfig sweep_2d() {
  ExperimentConfig c;
  c.dim = 2;
  c.n = 128;
  c.s = 0.5;
  c.delta = 0.5;
  c.T = 1.0;
  c.eps_list = {1e-1, 3e-2, 1e-2, 3e-3, 1e-3};
  return c;
}

ExperimentConfig sweep_3d() {
  ExperimentConfig c;
  c.dim = 3;
  c.n = 32;
  c.s = 0.5;
  c.delta = 0.5;
  c.T = 1.0;
  c.eps_list = {1e-1, 1e-2, 1e-3};
  c.amplitude = 0.05;
  return c;
}

ExperimentConfig audit_3d() {
  ExperimentConfig c;
  c.dim = 3;
  c.audit_fields = kTrilinearFields;
  c.audit_resolutions = {16, 32};
  return c;
}

// Every CSV the sweeps and the audit produce, concatenated with file names.
std::string all_csv(const SweepResult& a, const SweepResult& b, const InequalityAuditReport& audit) {
  std::string out;
  for (const SweepResult* r : {&a, &b}) {
    out += "== sweep\n" + sweep_csv(r->rows);
    for (const auto& row : r->rows) out += "== energies " + eps_tag(row.eps) + "\n" + energies_csv(row.series);
  }
  out += "== inequalities\n" + inequality_csv(audit);
  return out;
}

Verdict criterion_taylor_green_ns(const TaylorGreenRegression& tg, double elapsed) {
  return {tg.ns_linf_error <= kTaylorGreenTol && elapsed < kTaylorGreenSeconds,
          fmt("NS max pointwise error %.3e (tol %.0e), %.1f s (limit %.0f s)", tg.ns_linf_error,
              kTaylorGreenTol, elapsed, kTaylorGreenSeconds)};
}

Verdict criterion_wave_modes(const TaylorGreenRegression& tg, double tg_elapsed) {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> log_eps(-4.0, 0.0), log_t(-4.0, std::log10(0.5)), k2_dist(1.0, 50.0),
      log_gap(-8.0, -1.0), coin(0.0, 1.0);
  double worst_root = 0.0, worst_prop = 0.0;
  for (int i = 0; i < kModeTriples; ++i) {
    const double eps = std::pow(10.0, log_eps(rng));
    const double t = std::pow(10.0, log_t(rng));
    double k2 = k2_dist(rng);
    if (i % 2 == 0) {
      const double gap = i % 10 == 0 ? 0.0 : std::pow(10.0, log_gap(rng)) * (coin(rng) < 0.5 ? -1.0 : 1.0);
      k2 = (1.0 + gap) / (4.0 * eps);
    }
    const ModeRoots r = mode_roots(eps, k2);
    for (const auto l : {r.lambda_plus, r.lambda_minus}) {
      const double scale = eps * std::norm(l) + std::abs(l) + k2;
      worst_root = std::max(worst_root, std::abs(eps * l * l + l + k2) / scale);
    }
    worst_prop = std::max(worst_prop, test::propagator_error(eps, k2, t));
  }
  const double elapsed = seconds_since(start) + tg_elapsed;
  return {tg.nlw_mode_error <= kTaylorGreenTol && worst_root <= kModeTol && worst_prop <= kModeTol &&
              elapsed < kTaylorGreenSeconds,
          fmt("per-mode error %.3e (tol 1e-8); root residual %.3e, propagator error %.3e (tol 1e-10)",
              tg.nlw_mode_error, worst_root, worst_prop) +
              fmt(", %.1f s", elapsed)};
}

Verdict criterion_rate_2d(const SweepResult& r, double elapsed) {
  const bool ok = r.fit.defined && r.fit.slope >= kRate2dMinSlope && r.fit.r2 >= kRate2dMinR2 &&
                  elapsed < kRate2dSeconds;
  return {ok, fmt("slope %.4f (min %.2f), R^2 %.4f (min %.1f)", r.fit.slope, kRate2dMinSlope, r.fit.r2,
                  kRate2dMinR2) +
                  fmt(", %.1f s (limit %.0f s)", elapsed, kRate2dSeconds)};
}

Verdict criterion_rate_3d(const SweepResult& r, double elapsed) {
  double largest = 0.0;
  bool all_solved = true;
  for (const auto& row : r.rows) {
    largest = std::max(largest, row.hypotheses.small_data_norm);
    all_solved = all_solved && row.solved && !row.blowup;
  }
  const double min_slope = 0.5 * r.config.s - kRate3dSlopeMargin;
  const bool ok = all_solved && largest < kSmallData3d && r.fit.defined && r.fit.slope >= min_slope &&
                  elapsed < kRate3dSeconds;
  return {ok, fmt("slope %.4f (min %.2f), R^2 %.4f, max |u0|_{H^1/2} %.4f (< 1/16)", r.fit.slope, min_slope,
                  r.fit.r2, largest) +
                  fmt(", %.1f s (limit %.0f s)", elapsed, kRate3dSeconds)};
}

Verdict criterion_globalization(const SweepResult& r) {
  double sup = 0.0, initial = 0.0;
  bool no_blowup = true, monotone = true;
  int worst_N = 0;
  for (const auto& row : r.rows) {
    sup = std::max(sup, row.sup_eps_delta_E);
    initial = std::max(initial, row.initial_eps_delta_E);
    no_blowup = no_blowup && row.solved && !row.blowup;
    monotone = monotone && row.audit.smallest_monotone_N >= 0;
    worst_N = std::max(worst_N, row.audit.smallest_monotone_N);
  }
  const bool ok = no_blowup && monotone && sup <= kGlobalFactor * initial;
  return {ok, fmt("sup eps^d E %.4e <= 2 x %.4e; composite monotone (1e-7/step) for audit N <= %.0f", sup,
                  initial, worst_N) +
                  (no_blowup ? ", no blow-up" : ", BLOW-UP")};
}

Verdict criterion_algebra() {
  std::mt19937_64 rng(606);
  std::uniform_real_distribution<double> log_eps(-4.0, 0.0), sigma_dist(0.0, 1.5), s_dist(0.05, 0.95);
  double worst_energy = 0.0, worst_dafermos = 0.0, worst_gn = 0.0, worst_bernstein = 0.0, worst_jackson = 0.0;
  bool ok = true;
  for (int dim : {2, 3}) {
    const Grid g = make_grid(dim, dim == 2 ? 32 : 16);
    const double s0 = critical_shift(dim);
    for (int i = 0; i < kAlgebraStates; ++i) {
      const double eps = std::pow(10.0, log_eps(rng));
      const WaveState st{test::random_div_free(g, rng), test::random_div_free(g, rng), eps, 0.0};
      const double sigma = sigma_dist(rng);
      const double lower = 0.5 * std::pow(sobolev_norm(st.u, sigma), 2);
      const double e = energy(st, sigma);
      worst_energy = std::max(worst_energy, lower / e);
      ok = ok && e >= lower;

      const SpectralField v = test::random_div_free(g, rng);
      const double dist = std::pow(sobolev_norm(st.u - v, s0), 2);
      const double mod = 4.0 * dafermos_energy(st, v, s0);
      worst_dafermos = std::max(worst_dafermos, dist / mod);
      ok = ok && dist <= mod;

      const double gn = interpolation_ratios(st.u, 0.5).at("gagliardo_nirenberg");
      worst_gn = std::max(worst_gn, gn);
      ok = ok && gn <= 1.0 + kGnSlack;

      const double s = s_dist(rng);
      const SpectralField u0 = truncate_initial_data(v, eps).u0;
      const double b = check_bernstein(v, u0, eps, s + sigma, s);
      const double j = check_jackson(v, u0, eps, s, s0);
      worst_bernstein = std::max(worst_bernstein, b);
      worst_jackson = std::max(worst_jackson, j);
      ok = ok && b <= 1.0 && j <= 1.0;
    }
  }
  return {ok, fmt("max ratios over %.0f states: energy %.4f, modulated %.4f, GN %.6f (<= 1+1e-12)", 2.0 * kAlgebraStates,
                  worst_energy, worst_dafermos, worst_gn) +
                  fmt(", Bernstein %.4f, Jackson %.4f (<= 1)", worst_bernstein, worst_jackson)};
}

Verdict criterion_dafermos_identity() {
  const Grid g = make_grid(2, 16);
  const SpectralField tg = taylor_green(g);
  const double eps = 0.05, centre_t = 0.2;
  auto residual = [&](double h) {
    std::array<WaveState, 3> u;
    const auto centre = static_cast<std::size_t>(std::llround(centre_t / h));
    nlw_solve(tg, SpectralField(g, 2), eps, centre_t + h, h, [&](const WaveState& s, const StepInfo& info) {
      if (info.index + 1 >= centre && info.index <= centre + 1) u[info.index + 1 - centre] = s;
    });
    std::array<SpectralField, 3> v;
    for (std::size_t k = 0; k < 3; ++k) v[k] = tg * std::exp(-2.0 * u[k].t);
    return dafermos_derivative_residual(u, v, 0.0);
  };
  const double coarse = residual(2e-3), fine = residual(1e-3);
  const double ratio = coarse / fine;
  return {ratio >= kResidualRatioLow && ratio <= kResidualRatioHigh,
          fmt("residual %.3e (h=2e-3) / %.3e (h=1e-3) = %.4f, required in [3.5, 4.5]", coarse, fine, ratio)};
}

Verdict criterion_trilinear(const InequalityAuditReport& r) {
  double lo = 1e300, hi = 0.0;
  for (const auto& row : r.rows) {
    lo = std::min(lo, row.max_trilinear);
    hi = std::max(hi, row.max_trilinear);
  }
  const double spread = hi > 0.0 ? (hi - lo) / hi : 0.0;
  const bool ok = r.rows.size() == 2 && spread <= kTrilinearSpread && hi <= kTrilinearBound;
  return {ok, fmt("max ratio n=16 %.4e, n=32 %.4e, spread %.4f (<= 0.10), bound %.2e", r.rows.at(0).max_trilinear,
                  r.rows.at(1).max_trilinear, spread, kTrilinearBound)};
}

}  // namespace

int main() {
  std::vector<Verdict> verdicts(9);
  auto report = [&](int k) {
    const Verdict& v = verdicts[static_cast<std::size_t>(k - 1)];
    std::printf("criterion %d: %s  %s\n", k, v.pass ? "PASS" : "FAIL", v.detail.c_str());
    std::fflush(stdout);
  };
  try {
    auto start = std::chrono::steady_clock::now();
    const TaylorGreenRegression tg = run_taylor_green_regression();
    const double tg_elapsed = seconds_since(start);
    verdicts[0] = criterion_taylor_green_ns(tg, tg_elapsed);
    report(1);
    verdicts[1] = criterion_wave_modes(tg, tg_elapsed);
    report(2);

    start = std::chrono::steady_clock::now();
    const SweepResult two_d = run_convergence(sweep_2d(), RunOptions{1, false});
    verdicts[2] = criterion_rate_2d(two_d, seconds_since(start));
    report(3);

    start = std::chrono::steady_clock::now();
    const SweepResult three_d = run_convergence(sweep_3d(), RunOptions{1, false});
    verdicts[3] = criterion_rate_3d(three_d, seconds_since(start));
    report(4);

    verdicts[4] = criterion_globalization(two_d);
    report(5);
    verdicts[5] = criterion_algebra();
    report(6);
    verdicts[6] = criterion_dafermos_identity();
    report(7);

    const InequalityAuditReport audit = run_inequality_audit(audit_3d(), RunOptions{1, false});
    verdicts[7] = criterion_trilinear(audit);
    report(8);

    const std::string serial = all_csv(two_d, three_d, audit);
    const std::string parallel =
        all_csv(run_convergence(sweep_2d(), RunOptions{kParallelJobs, false}),
                run_convergence(sweep_3d(), RunOptions{kParallelJobs, false}),
                run_inequality_audit(audit_3d(), RunOptions{kParallelJobs, false}));
    verdicts[8] = {serial == parallel, fmt("CSV output with --jobs 1 and --jobs %.0f: %.0f bytes, ", kParallelJobs,
                                           static_cast<double>(serial.size())) +
                                           (serial == parallel ? "identical" : "DIFFERENT")};
    report(9);
  } catch (const std::exception& e) {
    std::printf("acceptance run aborted: %s\n", e.what());
    return 1;
  }
  int failed = 0;
  for (const auto& v : verdicts) failed += v.pass ? 0 : 1;
  std::printf("%d of 9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
