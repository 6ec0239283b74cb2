#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypns {

enum class DataSource { synthetic, taylor_green, file };

/// Settings of a convergence sweep, existence probe or inequality audit.
///
/// File format: one `key = value` per line, `#` starts a comment, lists are
/// comma-separated. Every key is optional; missing keys take the defaults
/// below. See README.md for the key reference.
struct ExperimentConfig {
  int dim = 2;
  int n = 128;
  double s = 0.5;
  double delta = 0.5;
  std::vector<double> eps_list{1e-1, 3e-2, 1e-2, 3e-3, 1e-3};
  double T = 1.0;
  double dt = 0.0;  // <= 0 selects the advective default
  std::uint64_t seed = 1;
  double amplitude = 1.0;
  DataSource data_source = DataSource::synthetic;
  std::string data_file;
  double threshold_c = 1.0;
  int N = 1;
  int max_N = 64;
  double blowup_factor = 1e6;
  std::string output_dir = "hypns_out";
  int sample_stride = 10;
  double u1_scale = 0.0;
  double hypothesis_constant = 1.0;
  double o1_bound = 1.0;
  double rate_tolerance = 0.1;
  double min_r2 = 0.9;
  int audit_fields = 500;
  std::vector<int> audit_resolutions{16, 32};
  double trilinear_bound = 1.0;
};

/// All problems found in a config, each prefixed with its line number when
/// it came from a file.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

/// Parses config text; `source` names the input in messages.
ExperimentConfig parse_config_text(const std::string& text, const std::string& source = "config");
/// Reads and parses a config file. Throws ConfigError listing every problem.
ExperimentConfig parse_config(const std::string& path);
/// Invariant violations of a config (empty when valid).
std::vector<std::string> validate(const ExperimentConfig& config);
/// Canonical dump: every key in a fixed order, parseable back to the same config.
std::string normalize_config(const ExperimentConfig& config);

const char* to_string(DataSource source);

}  // namespace hypns
