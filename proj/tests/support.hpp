#pragma once

// Shared generators and oracles for the test suites.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "hypns/spectral/grid.hpp"
#include "hypns/spectral/operators.hpp"
#include "hypns/spectral/spectral_field.hpp"

namespace hypns::test {

inline constexpr double kPi = std::numbers::pi;

/// Random physical field with standard normal point values, transformed.
inline SpectralField random_field(const Grid& grid, int components, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  PhysicalField values(grid, components);
  for (int c = 0; c < components; ++c) {
    for (auto& v : values.component(c)) v = normal(rng);
  }
  return transform(values).field;
}

/// Random smooth divergence-free field: random coefficients damped by
/// exp(-|k|^2 / (2 width^2)), dealiased and projected.
inline SpectralField random_smooth_field(const Grid& grid, std::mt19937_64& rng, double width = 3.0) {
  SpectralField f = random_field(grid, grid.dim(), rng);
  for (int c = 0; c < grid.dim(); ++c) {
    auto comp = f.component(c);
    for (std::size_t m = 0; m < comp.size(); ++m) comp[m] *= std::exp(-grid.k2(m) / (2.0 * width * width));
  }
  return leray_project(dealias(f));
}

/// Random divergence-free field over the whole dealiased band.
inline SpectralField random_div_free(const Grid& grid, std::mt19937_64& rng) {
  return leray_project(dealias(random_field(grid, grid.dim(), rng)));
}

/// Field with a single real-valued Fourier pair at k (and -k) in component c,
/// normalized to unit L2 norm.
inline SpectralField single_mode(const Grid& grid, int components, int c, const Wavevector& k) {
  SpectralField f(grid, components);
  f.set_coefficient(c, k, Complex{1.0, 0.0});
  f *= 1.0 / l2_norm(f);
  return f;
}

inline double max_abs_diff(const SpectralField& a, const SpectralField& b) {
  double d = 0.0;
  for (int c = 0; c < a.components(); ++c) {
    auto x = a.component(c);
    auto y = b.component(c);
    for (std::size_t m = 0; m < x.size(); ++m) d = std::max(d, std::abs(x[m] - y[m]));
  }
  return d;
}

inline double max_abs(const SpectralField& a) { return max_abs_diff(a, SpectralField::zeros_like(a)); }

}  // namespace hypns::test
