#include <cmath>
#include <stdexcept>

#include "hypns/diagnostics.hpp"

namespace hypns {

double trilinear_ratio(const SpectralField& f) {
  if (f.grid().dim() != 3 || f.components() != 3) {
    throw std::invalid_argument("trilinear_ratio: a 3D vector field is required");
  }
  const double half = sobolev_norm(f, 0.5);
  const double three_half = sobolev_norm(f, 1.5);
  if (half == 0.0 || three_half == 0.0) return 0.0;
  // For divergence-free f, (f . grad) f = div(f (x) f).
  const double lhs = std::abs(inner_product(f, tensor_divergence(f), 0.5));
  return lhs / (half * three_half * three_half);
}

std::map<std::string, double> interpolation_ratios(const SpectralField& f, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("interpolation_ratios: delta must lie in (0, 1)");
  }
  const double s0 = f.grid().dim() == 3 ? 0.5 : 0.0;
  auto h = [&](double a) { return sobolev_norm(f, a); };
  auto ratio = [](double lhs, double rhs) { return lhs == 0.0 ? 0.0 : lhs / rhs; };

  std::map<std::string, double> out;
  const double h1 = h(1.0);
  out["gagliardo_nirenberg"] = ratio(h1 * h1, h(0.5) * h(1.5));
  out["hdelta"] = ratio(h(delta), std::pow(h(0.0), 1.0 - delta) * std::pow(h1, delta));
  out["half_plus_delta"] =
      ratio(h(0.5 + delta), std::pow(h(0.5), 1.0 - delta) * std::pow(h(1.5), delta));
  out["linf_besov"] = ratio(linf_norm(f), std::pow(h(s0 + delta), delta) *
                                              std::pow(h(s0 + 1.0 + delta), 1.0 - delta));
  return out;
}

}  // namespace hypns
