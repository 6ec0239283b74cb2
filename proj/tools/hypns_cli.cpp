// Command-line front end: convergence sweeps, existence probes, inequality
// audits and the built-in Taylor-Green regression.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "hypns/experiment/config.hpp"
#include "hypns/experiment/experiments.hpp"
#include "hypns/experiment/report.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kError = 1;
constexpr int kFail = 2;

struct Options {
  std::string config_path;
  std::string out_dir;
  bool force = false;
  int jobs = 1;
};

hypns::ExperimentConfig load(const Options& o) {
  return o.config_path.empty() ? hypns::ExperimentConfig{} : hypns::parse_config(o.config_path);
}

std::string output_dir(const Options& o, const hypns::ExperimentConfig& config) {
  if (const char* env = std::getenv("HYPNS_OUT"); env && *env) return env;
  if (!o.out_dir.empty()) return o.out_dir;
  return config.output_dir;
}

void write_text(const std::string& dir, const std::string& name, const std::string& text) {
  std::filesystem::create_directories(dir);
  const auto path = std::filesystem::path(dir) / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  out << text;
  if (!out) throw std::runtime_error(path.string() + ": write failed");
}

int report_gate(const std::vector<hypns::SweepRow>& rows) {
  int skipped = 0;
  for (const auto& r : rows) {
    if (r.solved) continue;
    ++skipped;
    std::printf("eps = %.3e skipped: %s\n", r.eps, r.message.c_str());
    for (const auto& t : r.hypotheses.terms) {
      std::printf("    %-32s ratio %.4e %s\n", t.name.c_str(), t.ratio, t.pass ? "ok" : "FAIL");
    }
    std::printf("    %-32s value %.4e %s\n", r.hypotheses.o1_term.name.c_str(), r.hypotheses.o1_term.value,
                r.hypotheses.o1_term.pass ? "ok" : "FAIL");
    if (r.hypotheses.small_data_checked) {
      std::printf("    |u0|_{H^1/2} = %.4e (must be < 1/16) %s\n", r.hypotheses.small_data_norm,
                  r.hypotheses.small_data_ok ? "ok" : "FAIL");
    }
  }
  return skipped;
}

int cmd_converge(const Options& o) {
  const auto config = load(o);
  const auto result = hypns::run_convergence(config, {o.jobs, o.force});
  const std::string dir = output_dir(o, config);
  for (const auto& path : hypns::emit_report(result, dir)) std::printf("wrote %s\n", path.c_str());
  const int skipped = report_gate(result.rows);
  bool blowup = false;
  for (const auto& r : result.rows) {
    std::printf("eps = %.3e  sup_err_sq = %.6e  sup_eps_delta_E = %.6e  blowup = %d\n", r.eps,
                r.sup_err_sq, r.sup_eps_delta_E, r.blowup ? 1 : 0);
    blowup = blowup || r.blowup;
  }
  if (result.fit.defined) {
    std::printf("slope = %.6f  intercept = %.6f  R^2 = %.6f  (required slope >= %.3f, R^2 >= %.3f)\n",
                result.fit.slope, result.fit.intercept, result.fit.r2,
                0.5 * config.s - config.rate_tolerance, config.min_r2);
  } else {
    std::printf("fit undefined: fewer than two usable points\n");
  }
  const bool ok = result.rate_ok() && !blowup && skipped == 0;
  std::printf("%s\n", ok ? "PASS" : "FAIL");
  return ok ? kPass : kFail;
}

int cmd_exist(const Options& o) {
  const auto config = load(o);
  const auto summary = hypns::run_existence_probe(config, {o.jobs, o.force});
  const std::string dir = output_dir(o, config);
  write_text(dir, "existence.csv", hypns::existence_csv(summary));
  std::printf("wrote %s/existence.csv\n", dir.c_str());
  report_gate(summary.rows);
  for (const auto& r : summary.rows) {
    if (!r.solved) continue;
    std::printf("eps = %.3e  sup_eps_delta_E = %.6e  monotone N = %d  blowup = %d\n", r.eps,
                r.sup_eps_delta_E, r.audit.smallest_monotone_N, r.blowup ? 1 : 0);
  }
  std::printf("%s\n", summary.pass ? "PASS" : "FAIL");
  return summary.pass ? kPass : kFail;
}

int cmd_audit(const Options& o) {
  const auto config = load(o);
  const auto report = hypns::run_inequality_audit(config, {o.jobs, o.force});
  const std::string dir = output_dir(o, config);
  write_text(dir, "inequalities.csv", hypns::inequality_csv(report));
  std::printf("wrote %s/inequalities.csv\n", dir.c_str());
  for (const auto& r : report.rows) {
    std::printf("n = %d  GN %.6f  Hdelta %.6f  H1/2+delta %.6f  Bernstein %.6f  Jackson %.6f  "
                "trilinear %.6f  Linf/Besov %.4f\n",
                r.n, r.max_gagliardo_nirenberg, r.max_hdelta, r.max_half_plus_delta, r.max_bernstein,
                r.max_jackson, r.max_trilinear, r.max_linf_besov);
  }
  std::printf("trilinear spread across resolutions = %.4f\n", report.trilinear_spread);
  std::printf("%s\n", report.pass ? "PASS" : "FAIL");
  return report.pass ? kPass : kFail;
}

int cmd_taylor_green() {
  const auto r = hypns::run_taylor_green_regression();
  std::printf("navier-stokes  max pointwise error %.3e  %s\n", r.ns_linf_error, r.ns_pass ? "PASS" : "FAIL");
  std::printf("relaxation     max per-mode error  %.3e  %s\n", r.nlw_mode_error, r.nlw_pass ? "PASS" : "FAIL");
  return r.ns_pass && r.nlw_pass ? kPass : kFail;
}

int cmd_normalize(const Options& o) {
  std::fputs(hypns::normalize_config(load(o)).c_str(), stdout);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relaxed Navier-Stokes experiments"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub, bool with_output) {
    sub->add_option("--config", o.config_path, "Config file (key = value lines)")->check(CLI::ExistingFile);
    if (with_output) {
      sub->add_option("--out", o.out_dir, "Output directory (HYPNS_OUT overrides)");
      sub->add_flag("--force", o.force, "Solve even if the data fail the hypotheses");
      sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    }
  };
  auto* converge = app.add_subcommand("converge", "Convergence sweep over eps_list");
  auto* exist = app.add_subcommand("exist", "Long-horizon existence probe");
  auto* audit = app.add_subcommand("audit", "Random-field inequality audit");
  auto* tg = app.add_subcommand("taylor-green", "Built-in Taylor-Green regression");
  auto* norm = app.add_subcommand("normalize-config", "Print the config with defaults filled in");
  add_common(converge, true);
  add_common(exist, true);
  add_common(audit, true);
  add_common(norm, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kError;
  }

  try {
    if (converge->parsed()) return cmd_converge(o);
    if (exist->parsed()) return cmd_exist(o);
    if (audit->parsed()) return cmd_audit(o);
    if (tg->parsed()) return cmd_taylor_green();
    if (norm->parsed()) return cmd_normalize(o);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kError;
  }
  return kError;
}
