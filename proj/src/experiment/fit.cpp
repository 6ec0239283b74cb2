#include "hypns/experiment/fit.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace hypns {

RateFit fit_rate(std::span<const double> eps, std::span<const double> values) {
  if (eps.size() != values.size()) throw std::invalid_argument("fit_rate: size mismatch");
  RateFit fit;
  std::vector<double> x, y;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (!(values[i] > 0.0) || !std::isfinite(values[i]) || !(eps[i] > 0.0)) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "excluded nonpositive value %.6e at eps = %.6e", values[i], eps[i]);
      fit.warnings.emplace_back(buf);
      continue;
    }
    x.push_back(std::log(eps[i]));
    y.push_back(std::log(values[i]));
  }
  fit.points = x.size();
  if (x.size() < 2) return fit;

  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) {
    fit.warnings.emplace_back("all eps values coincide; slope undefined");
    return fit;
  }
  fit.defined = true;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ss_res += r * r;
  }
  fit.r2 = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  return fit;
}

}  // namespace hypns
