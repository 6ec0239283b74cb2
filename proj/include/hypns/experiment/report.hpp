#pragma once

#include <string>
#include <vector>

#include "hypns/experiment/experiments.hpp"

namespace hypns {

/// Writes sweep.csv, energies_<eps>.csv, fit.txt and sweep.svg into
/// output_dir (created if missing). Returns the paths written. Throws
/// std::runtime_error naming the path on IO failure.
std::vector<std::string> emit_report(const SweepResult& result, const std::string& output_dir);

/// CSV text with the sweep columns; one row per entry.
std::string sweep_csv(const std::vector<SweepRow>& rows);
/// CSV text of one energy time series.
std::string energies_csv(const std::vector<EnergyReport>& series);
/// Log-log SVG of sup_err_sq against eps with the fitted line (when defined)
/// and a reference line of slope s/2 through the largest-eps point.
std::string sweep_svg(const SweepResult& result);
/// Fixed-precision file-name tag for an eps value, e.g. "1.000e-03".
std::string eps_tag(double eps);

std::string existence_csv(const ExistenceSummary& summary);
std::string inequality_csv(const InequalityAuditReport& report);

}  // namespace hypns
