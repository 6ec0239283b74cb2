#include "hypns/experiment/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace hypns {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10e", v);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& text,
                std::vector<std::string>& written) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  out << text;
  out.close();
  if (!out) throw std::runtime_error(path.string() + ": write failed");
  written.push_back(path.string());
}

std::string fit_text(const SweepResult& result) {
  const auto& c = result.config;
  std::string out;
  auto line = [&](const std::string& k, const std::string& v) { out += k + " = " + v + "\n"; };
  line("quantity", c.dim == 3 ? "sup_t |u - v|^2 in H^{1/2}-dot" : "sup_t |u - v|^2 in L2");
  line("points", std::to_string(result.fit.points));
  if (result.fit.defined) {
    line("slope", num(result.fit.slope));
    line("intercept", num(result.fit.intercept));
    line("C_T_estimate", num(std::exp(result.fit.intercept)));
    line("r2", num(result.fit.r2));
  } else {
    line("slope", "undefined");
  }
  line("reference_slope", num(0.5 * c.s));
  line("required_slope", num(0.5 * c.s - c.rate_tolerance));
  line("required_r2", num(c.min_r2));
  line("rate_ok", result.rate_ok() ? "true" : "false");
  if (result.cross_fit.defined) line("cross_term_slope", num(result.cross_fit.slope));
  for (const auto& w : result.fit.warnings) line("warning", w);
  return out;
}

}  // namespace

std::string eps_tag(double eps) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", eps);
  return buf;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "epsilon,sup_err_sq,sup_dafermos,sup_eps_delta_E,cross_term,blowup,first_threshold_violation_t\n";
  for (const auto& r : rows) {
    out += num(r.eps) + "," + num(r.sup_err_sq) + "," + num(r.sup_dafermos) + "," +
           num(r.sup_eps_delta_E) + "," + num(r.cross_term) + "," + (r.blowup ? "1" : "0") + "," +
           (r.first_threshold_violation_t ? num(*r.first_threshold_violation_t) : std::string()) + "\n";
  }
  return out;
}

std::string energies_csv(const std::vector<EnergyReport>& series) {
  std::string out = "t,e_base,e_delta,composite,dafermos,linf\n";
  for (const auto& r : series) {
    out += num(r.t) + "," + num(r.e_base) + "," + num(r.e_delta) + "," + num(r.composite) + "," +
           num(r.dafermos) + "," + num(r.linf) + "\n";
  }
  return out;
}

std::string existence_csv(const ExistenceSummary& summary) {
  std::string out =
      "epsilon,solved,blowup,initial_eps_delta_E,sup_eps_delta_E,smallest_monotone_N,"
      "first_threshold_violation_t\n";
  for (const auto& r : summary.rows) {
    out += num(r.eps) + "," + (r.solved ? "1" : "0") + "," + (r.blowup ? "1" : "0") + "," +
           num(r.initial_eps_delta_E) + "," + num(r.sup_eps_delta_E) + "," +
           std::to_string(r.audit.smallest_monotone_N) + "," +
           (r.first_threshold_violation_t ? num(*r.first_threshold_violation_t) : std::string()) + "\n";
  }
  return out;
}

std::string inequality_csv(const InequalityAuditReport& report) {
  std::string out =
      "n,fields,max_gagliardo_nirenberg,max_hdelta,max_half_plus_delta,max_linf_besov,"
      "max_bernstein,max_jackson,max_trilinear\n";
  for (const auto& r : report.rows) {
    out += std::to_string(r.n) + "," + std::to_string(r.fields) + "," + num(r.max_gagliardo_nirenberg) +
           "," + num(r.max_hdelta) + "," + num(r.max_half_plus_delta) + "," + num(r.max_linf_besov) +
           "," + num(r.max_bernstein) + "," + num(r.max_jackson) + "," + num(r.max_trilinear) + "\n";
  }
  return out;
}

std::string sweep_svg(const SweepResult& result) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : result.rows) {
    if (r.solved && !r.blowup && r.sup_err_sq > 0.0) {
      pts.emplace_back(std::log10(r.eps), std::log10(r.sup_err_sq));
    }
  }
  if (pts.empty()) return {};

  const double W = 640, H = 480, margin = 60;
  double x0 = pts[0].first, x1 = x0, y0 = pts[0].second, y1 = y0;
  for (const auto& [x, y] : pts) {
    x0 = std::min(x0, x); x1 = std::max(x1, x);
    y0 = std::min(y0, y); y1 = std::max(y1, y);
  }
  if (x1 - x0 < 1e-9) { x0 -= 0.5; x1 += 0.5; }
  if (y1 - y0 < 1e-9) { y0 -= 0.5; y1 += 0.5; }
  const double padx = 0.05 * (x1 - x0), pady = 0.1 * (y1 - y0);
  x0 -= padx; x1 += padx; y0 -= pady; y1 += pady;
  auto px = [&](double x) { return margin + (x - x0) / (x1 - x0) * (W - 2 * margin); };
  auto py = [&](double y) { return H - margin - (y - y0) / (y1 - y0) * (H - 2 * margin); };
  char buf[256];
  std::string svg;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
                "viewBox=\"0 0 %.0f %.0f\">\n",
                W, H, W, H);
  svg += buf;
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  std::snprintf(buf, sizeof buf,
                "<rect x=\"%.0f\" y=\"%.0f\" width=\"%.0f\" height=\"%.0f\" fill=\"none\" stroke=\"black\"/>\n",
                margin, margin, W - 2 * margin, H - 2 * margin);
  svg += buf;

  auto line = [&](double ax, double ay, double bx, double by, const char* colour, const char* dash) {
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"%s\" "
                  "stroke-width=\"1.5\"%s/>\n",
                  px(ax), py(ay), px(bx), py(by), colour, dash);
    svg += buf;
  };
  // Clip the lines to the plotted x range; y may leave the frame slightly.
  if (result.fit.defined && pts.size() >= 2) {
    const double l10 = std::log(10.0);
    auto fy = [&](double x) { return (result.fit.intercept + result.fit.slope * x * l10) / l10; };
    line(x0, fy(x0), x1, fy(x1), "#c03030", "");
  }
  {
    const auto& anchor = *std::max_element(pts.begin(), pts.end());
    const double slope = 0.5 * result.config.s;
    auto ry = [&](double x) { return anchor.second + slope * (x - anchor.first); };
    line(x0, ry(x0), x1, ry(x1), "#3050c0", " stroke-dasharray=\"6,4\"");
  }
  for (const auto& [x, y] : pts) {
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"4\" fill=\"black\"/>\n", px(x), py(y));
    svg += buf;
  }
  std::snprintf(buf, sizeof buf,
                "<text x=\"%.0f\" y=\"%.0f\" font-family=\"sans-serif\" font-size=\"14\" "
                "text-anchor=\"middle\">log10 eps</text>\n",
                W / 2, H - 15);
  svg += buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"18\" y=\"%.0f\" font-family=\"sans-serif\" font-size=\"14\" "
                "transform=\"rotate(-90 18 %.0f)\" text-anchor=\"middle\">log10 sup err^2</text>\n",
                H / 2, H / 2);
  svg += buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"%.0f\" y=\"40\" font-family=\"sans-serif\" font-size=\"12\">"
                "x: [%.3f, %.3f]  y: [%.3f, %.3f]  red: fit  blue dashed: slope %.3f</text>\n",
                margin, x0, x1, y0, y1, 0.5 * result.config.s);
  svg += buf;
  svg += "</svg>\n";
  return svg;
}

std::vector<std::string> emit_report(const SweepResult& result, const std::string& output_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(output_dir, ec);
  if (ec) throw std::runtime_error(output_dir + ": cannot create directory: " + ec.message());
  std::vector<std::string> written;
  const fs::path dir(output_dir);
  write_file(dir / "sweep.csv", sweep_csv(result.rows), written);
  for (const auto& r : result.rows) {
    if (r.solved) write_file(dir / ("energies_" + eps_tag(r.eps) + ".csv"), energies_csv(r.series), written);
  }
  if (!result.rows.empty()) write_file(dir / "fit.txt", fit_text(result), written);
  const std::string svg = sweep_svg(result);
  if (!svg.empty()) write_file(dir / "sweep.svg", svg, written);
  return written;
}

}  // namespace hypns
