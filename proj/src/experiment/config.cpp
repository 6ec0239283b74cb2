#include "hypns/experiment/config.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace hypns {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& text, double& out) {
  const std::string t = trim(text);
  if (t.empty()) return false;
  char* end = nullptr;
  errno = 0;
  out = std::strtod(t.c_str(), &end);
  return errno == 0 && end == t.c_str() + t.size() && std::isfinite(out);
}

bool parse_int(const std::string& text, long long& out) {
  const std::string t = trim(text);
  if (t.empty()) return false;
  char* end = nullptr;
  errno = 0;
  out = std::strtoll(t.c_str(), &end, 10);
  return errno == 0 && end == t.c_str() + t.size();
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

// Shortest text that parses back to the same double.
std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

using Setter = std::function<std::string(ExperimentConfig&, const std::string&)>;

Setter int_key(int ExperimentConfig::*field) {
  return [field](ExperimentConfig& c, const std::string& v) -> std::string {
    long long x = 0;
    if (!parse_int(v, x) || x < -2147483647LL || x > 2147483647LL) return "expected an integer";
    c.*field = static_cast<int>(x);
    return {};
  };
}

Setter double_key(double ExperimentConfig::*field) {
  return [field](ExperimentConfig& c, const std::string& v) -> std::string {
    double x = 0.0;
    if (!parse_double(v, x)) return "expected a real number";
    c.*field = x;
    return {};
  };
}

Setter string_key(std::string ExperimentConfig::*field) {
  return [field](ExperimentConfig& c, const std::string& v) -> std::string {
    if (v.empty()) return "expected a non-empty string";
    c.*field = v;
    return {};
  };
}

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"dim", int_key(&ExperimentConfig::dim)},
      {"n", int_key(&ExperimentConfig::n)},
      {"s", double_key(&ExperimentConfig::s)},
      {"delta", double_key(&ExperimentConfig::delta)},
      {"eps_list",
       [](ExperimentConfig& c, const std::string& v) -> std::string {
         std::vector<double> list;
         for (const auto& item : split_list(v)) {
           double x = 0.0;
           if (!parse_double(item, x)) return "expected a comma-separated list of reals";
           list.push_back(x);
         }
         if (list.empty()) return "expected at least one value";
         c.eps_list = list;
         return {};
       }},
      {"T", double_key(&ExperimentConfig::T)},
      {"dt", double_key(&ExperimentConfig::dt)},
      {"seed",
       [](ExperimentConfig& c, const std::string& v) -> std::string {
         long long x = 0;
         if (!parse_int(v, x) || x < 0) return "expected a non-negative integer";
         c.seed = static_cast<std::uint64_t>(x);
         return {};
       }},
      {"amplitude", double_key(&ExperimentConfig::amplitude)},
      {"data_source",
       [](ExperimentConfig& c, const std::string& v) -> std::string {
         if (v == "synthetic") c.data_source = DataSource::synthetic;
         else if (v == "taylor_green") c.data_source = DataSource::taylor_green;
         else if (v == "file") c.data_source = DataSource::file;
         else return "expected synthetic, taylor_green or file";
         return {};
       }},
      {"data_file", string_key(&ExperimentConfig::data_file)},
      {"threshold_c", double_key(&ExperimentConfig::threshold_c)},
      {"N", int_key(&ExperimentConfig::N)},
      {"max_N", int_key(&ExperimentConfig::max_N)},
      {"blowup_factor", double_key(&ExperimentConfig::blowup_factor)},
      {"output_dir", string_key(&ExperimentConfig::output_dir)},
      {"sample_stride", int_key(&ExperimentConfig::sample_stride)},
      {"u1_scale", double_key(&ExperimentConfig::u1_scale)},
      {"hypothesis_constant", double_key(&ExperimentConfig::hypothesis_constant)},
      {"o1_bound", double_key(&ExperimentConfig::o1_bound)},
      {"rate_tolerance", double_key(&ExperimentConfig::rate_tolerance)},
      {"min_r2", double_key(&ExperimentConfig::min_r2)},
      {"audit_fields", int_key(&ExperimentConfig::audit_fields)},
      {"audit_resolutions",
       [](ExperimentConfig& c, const std::string& v) -> std::string {
         std::vector<int> list;
         for (const auto& item : split_list(v)) {
           long long x = 0;
           if (!parse_int(item, x)) return "expected a comma-separated list of integers";
           list.push_back(static_cast<int>(x));
         }
         if (list.empty()) return "expected at least one value";
         c.audit_resolutions = list;
         return {};
       }},
      {"trilinear_bound", double_key(&ExperimentConfig::trilinear_bound)},
  };
  return table;
}

std::string join_problems(const std::vector<std::string>& problems) {
  std::string out = "invalid configuration:";
  for (const auto& p : problems) out += "\n  " + p;
  return out;
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> problems)
    : std::runtime_error(join_problems(problems)), problems_(std::move(problems)) {}

const char* to_string(DataSource source) {
  switch (source) {
    case DataSource::synthetic: return "synthetic";
    case DataSource::taylor_green: return "taylor_green";
    case DataSource::file: return "file";
  }
  return "synthetic";
}

std::vector<std::string> validate(const ExperimentConfig& c) {
  std::vector<std::string> p;
  if (c.dim != 2 && c.dim != 3) p.push_back("dim: must be 2 or 3");
  if (c.n < 8 || c.n % 2 != 0) p.push_back("n: must be an even integer >= 8");
  if (!(c.s > 0.0 && c.s < 1.0)) p.push_back("s: must lie in (0, 1) as the convergence theorems require");
  if (!(c.delta > 0.0 && c.delta < 1.0)) p.push_back("delta: must lie in (0, 1)");
  for (std::size_t i = 0; i < c.eps_list.size(); ++i) {
    if (!(c.eps_list[i] > 0.0)) p.push_back("eps_list: every value must be > 0");
    if (i > 0 && !(c.eps_list[i] < c.eps_list[i - 1])) {
      p.push_back("eps_list: values must be strictly descending");
      break;
    }
  }
  if (c.eps_list.empty()) p.push_back("eps_list: at least one value is required");
  if (!(c.T >= 0.0)) p.push_back("T: must be >= 0");
  if (!(c.amplitude >= 0.0)) p.push_back("amplitude: must be >= 0");
  if (c.data_source == DataSource::file && c.data_file.empty()) {
    p.push_back("data_file: required when data_source = file");
  }
  if (c.data_source == DataSource::taylor_green && c.dim != 2) {
    p.push_back("data_source: taylor_green is only defined for dim = 2");
  }
  if (!(c.threshold_c > 0.0)) p.push_back("threshold_c: must be > 0");
  if (c.N < 0) p.push_back("N: must be >= 0");
  if (c.max_N < 0) p.push_back("max_N: must be >= 0");
  if (!(c.blowup_factor > 1.0)) p.push_back("blowup_factor: must be > 1");
  if (c.sample_stride < 1) p.push_back("sample_stride: must be >= 1");
  if (!(c.hypothesis_constant > 0.0)) p.push_back("hypothesis_constant: must be > 0");
  if (!(c.o1_bound > 0.0)) p.push_back("o1_bound: must be > 0");
  if (!(c.rate_tolerance >= 0.0)) p.push_back("rate_tolerance: must be >= 0");
  if (!(c.min_r2 >= 0.0 && c.min_r2 <= 1.0)) p.push_back("min_r2: must lie in [0, 1]");
  if (c.audit_fields < 1) p.push_back("audit_fields: must be >= 1");
  for (int n : c.audit_resolutions) {
    if (n < 8 || n % 2 != 0) {
      p.push_back("audit_resolutions: each value must be an even integer >= 8");
      break;
    }
  }
  if (!(c.trilinear_bound > 0.0)) p.push_back("trilinear_bound: must be > 0");
  return p;
}

ExperimentConfig parse_config_text(const std::string& text, const std::string& source) {
  ExperimentConfig config;
  std::vector<std::string> problems;
  std::map<std::string, int> seen;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = source + ":" + std::to_string(number) + ": ";
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      problems.push_back(where + "expected 'key = value'");
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) {
      problems.push_back(where + "unknown key '" + key + "'");
      continue;
    }
    if (auto prev = seen.find(key); prev != seen.end()) {
      problems.push_back(where + key + ": duplicate of line " + std::to_string(prev->second));
      continue;
    }
    seen[key] = number;
    if (std::string err = it->second(config, value); !err.empty()) {
      problems.push_back(where + key + ": " + err);
    }
  }
  for (const auto& v : validate(config)) {
    const std::string key = v.substr(0, v.find(':'));
    auto it = seen.find(key);
    problems.push_back(it != seen.end() ? source + ":" + std::to_string(it->second) + ": " + v
                                        : source + ": " + v);
  }
  if (!problems.empty()) throw ConfigError(problems);
  return config;
}

ExperimentConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({path + ": cannot open file"});
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

std::string normalize_config(const ExperimentConfig& c) {
  std::string out;
  auto put = [&](const std::string& k, const std::string& v) { out += k + " = " + v + "\n"; };
  put("dim", std::to_string(c.dim));
  put("n", std::to_string(c.n));
  put("s", format_double(c.s));
  put("delta", format_double(c.delta));
  std::string eps;
  for (std::size_t i = 0; i < c.eps_list.size(); ++i) eps += (i ? ", " : "") + format_double(c.eps_list[i]);
  put("eps_list", eps);
  put("T", format_double(c.T));
  put("dt", format_double(c.dt));
  put("seed", std::to_string(c.seed));
  put("amplitude", format_double(c.amplitude));
  put("data_source", to_string(c.data_source));
  if (!c.data_file.empty()) put("data_file", c.data_file);
  put("threshold_c", format_double(c.threshold_c));
  put("N", std::to_string(c.N));
  put("max_N", std::to_string(c.max_N));
  put("blowup_factor", format_double(c.blowup_factor));
  put("output_dir", c.output_dir);
  put("sample_stride", std::to_string(c.sample_stride));
  put("u1_scale", format_double(c.u1_scale));
  put("hypothesis_constant", format_double(c.hypothesis_constant));
  put("o1_bound", format_double(c.o1_bound));
  put("rate_tolerance", format_double(c.rate_tolerance));
  put("min_r2", format_double(c.min_r2));
  put("audit_fields", std::to_string(c.audit_fields));
  std::string res;
  for (std::size_t i = 0; i < c.audit_resolutions.size(); ++i) {
    res += (i ? ", " : "") + std::to_string(c.audit_resolutions[i]);
  }
  put("audit_resolutions", res);
  put("trilinear_bound", format_double(c.trilinear_bound));
  return out;
}

}  // namespace hypns
