#include "hypns/spectral/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "fft.hpp"

namespace hypns {

namespace {

double unitary_scale(const Grid& grid) {
  return std::pow(2.0 * std::numbers::pi, 0.5 * grid.dim());
}

void to_spectral(const Grid& grid, std::span<const double> values, std::span<Complex> out) {
  detail::fft_forward(grid, values, out);
  const double scale = unitary_scale(grid) / static_cast<double>(grid.physical_size());
  for (auto& v : out) v *= scale;
}

void to_physical(const Grid& grid, std::span<const Complex> coeffs, std::span<double> out) {
  detail::fft_inverse(grid, coeffs, out);
  const double scale = 1.0 / unitary_scale(grid);
  for (auto& v : out) v *= scale;
}

void require_vector(const SpectralField& f, const char* what) {
  if (f.components() != f.grid().dim()) {
    throw std::invalid_argument(std::string(what) + ": expected a vector field");
  }
}

// Multiplier i k_axis with the Nyquist wavenumber removed.
Complex derivative_symbol(const Grid& grid, std::size_t mode, int axis) {
  const int k = grid.wavevector(mode)[static_cast<std::size_t>(axis)];
  if (std::abs(k) == grid.n() / 2) return {0.0, 0.0};
  return {0.0, static_cast<double>(k)};
}

// Table of k2(m)^exponent, cached per thread since the same exponents recur
// every time step.
const std::vector<double>& k2_power_table(const Grid& grid, double exponent) {
  struct Key {
    int dim, n;
    double exponent;
    bool operator<(const Key& o) const {
      return std::tie(dim, n, exponent) < std::tie(o.dim, o.n, o.exponent);
    }
  };
  thread_local std::map<Key, std::vector<double>> cache;
  const Key key{grid.dim(), grid.n(), exponent};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<double> table(grid.spectral_size());
  table[0] = 0.0;
  for (std::size_t m = 1; m < table.size(); ++m) table[m] = std::pow(grid.k2(m), exponent);
  return cache.emplace(key, std::move(table)).first->second;
}

}  // namespace

TransformResult transform(const PhysicalField& values) {
  const Grid& grid = values.grid();
  TransformResult result{SpectralField(grid, values.components()), {}};
  result.means.resize(static_cast<std::size_t>(values.components()));
  for (int c = 0; c < values.components(); ++c) {
    auto out = result.field.component(c);
    detail::fft_forward(grid, values.component(c), out);
    result.means[static_cast<std::size_t>(c)] =
        out[0].real() / static_cast<double>(grid.physical_size());
    const double scale = unitary_scale(grid) / static_cast<double>(grid.physical_size());
    for (auto& v : out) v *= scale;
    out[0] = Complex{0.0, 0.0};
  }
  return result;
}

PhysicalField inverse_transform(const SpectralField& field) {
  PhysicalField out(field.grid(), field.components());
  for (int c = 0; c < field.components(); ++c) {
    to_physical(field.grid(), field.component(c), out.component(c));
  }
  return out;
}

SpectralField lambda_power(const SpectralField& f, double sigma) {
  SpectralField out = f;
  if (sigma == 0.0) {
    for (int c = 0; c < out.components(); ++c) out.component(c)[0] = Complex{0.0, 0.0};
    return out;
  }
  const auto& mult = k2_power_table(f.grid(), 0.5 * sigma);
  for (int c = 0; c < out.components(); ++c) {
    auto comp = out.component(c);
    for (std::size_t m = 0; m < comp.size(); ++m) comp[m] *= mult[m];
  }
  return out;
}

double inner_product(const SpectralField& f, const SpectralField& g, double sigma) {
  if (!(f.grid() == g.grid()) || f.components() != g.components()) {
    throw std::invalid_argument("inner_product: field shape mismatch");
  }
  const Grid& grid = f.grid();
  const auto& w = k2_power_table(grid, sigma);
  double total = 0.0;
  for (int c = 0; c < f.components(); ++c) {
    auto a = f.component(c);
    auto b = g.component(c);
    for (std::size_t m = 1; m < a.size(); ++m) {
      const double re = a[m].real() * b[m].real() + a[m].imag() * b[m].imag();
      total += grid.weight(m) * w[m] * re;
    }
  }
  return total;
}

double sobolev_norm(const SpectralField& f, double sigma) {
  return std::sqrt(std::max(0.0, inner_product(f, f, sigma)));
}

double l2_norm(const SpectralField& f) { return sobolev_norm(f, 0.0); }

double inhomogeneous_norm(const SpectralField& f, double sigma) {
  const double a = inner_product(f, f, 0.0);
  const double b = inner_product(f, f, sigma);
  return std::sqrt(std::max(0.0, a + b));
}

double linf_norm(const SpectralField& f) {
  const PhysicalField values = inverse_transform(f);
  const std::size_t npts = f.grid().physical_size();
  double best = 0.0;
  for (std::size_t i = 0; i < npts; ++i) {
    double s = 0.0;
    for (int c = 0; c < values.components(); ++c) {
      const double v = values.component(c)[i];
      s += v * v;
    }
    best = std::max(best, s);
  }
  return std::sqrt(best);
}

NormSet compute_norms(const SpectralField& f, std::span<const double> sigmas) {
  NormSet norms;
  norms.l2 = l2_norm(f);
  for (double s : sigmas) norms.hs[s] = sobolev_norm(f, s);
  norms.linf = linf_norm(f);
  return norms;
}

SpectralField leray_project(const SpectralField& f) {
  require_vector(f, "leray_project");
  const Grid& grid = f.grid();
  const int dim = grid.dim();
  SpectralField out = f;
  for (std::size_t m = 0; m < grid.spectral_size(); ++m) {
    if (m == 0 || grid.is_nyquist(m)) {
      for (int c = 0; c < dim; ++c) out.component(c)[m] = Complex{0.0, 0.0};
      continue;
    }
    const auto& k = grid.wavevector(m);
    Complex kdotf{0.0, 0.0};
    for (int c = 0; c < dim; ++c) kdotf += static_cast<double>(k[c]) * f.component(c)[m];
    const Complex scale = kdotf / grid.k2(m);
    for (int c = 0; c < dim; ++c) out.component(c)[m] -= static_cast<double>(k[c]) * scale;
  }
  return out;
}

SpectralField divergence(const SpectralField& f) {
  require_vector(f, "divergence");
  const Grid& grid = f.grid();
  SpectralField out(grid, 1);
  auto d = out.component(0);
  for (std::size_t m = 0; m < grid.spectral_size(); ++m) {
    Complex s{0.0, 0.0};
    for (int c = 0; c < grid.dim(); ++c) s += derivative_symbol(grid, m, c) * f.component(c)[m];
    d[m] = s;
  }
  return out;
}

SpectralField gradient(const SpectralField& scalar) {
  if (scalar.components() != 1) throw std::invalid_argument("gradient: expected a scalar field");
  const Grid& grid = scalar.grid();
  SpectralField out(grid, grid.dim());
  auto s = scalar.component(0);
  for (int c = 0; c < grid.dim(); ++c) {
    auto o = out.component(c);
    for (std::size_t m = 0; m < grid.spectral_size(); ++m) o[m] = derivative_symbol(grid, m, c) * s[m];
  }
  return out;
}

SpectralField laplacian(const SpectralField& f) {
  SpectralField out = f;
  const Grid& grid = f.grid();
  for (int c = 0; c < out.components(); ++c) {
    auto o = out.component(c);
    for (std::size_t m = 0; m < o.size(); ++m) o[m] *= -grid.k2(m);
  }
  return out;
}

SpectralField dealias(const SpectralField& f) {
  SpectralField out = f;
  const Grid& grid = f.grid();
  for (int c = 0; c < out.components(); ++c) {
    auto o = out.component(c);
    for (std::size_t m = 0; m < o.size(); ++m) {
      if (!grid.is_resolved(m)) o[m] = Complex{0.0, 0.0};
    }
  }
  return out;
}

SpectralField product(const SpectralField& a, const SpectralField& b) {
  if (a.components() != 1 || b.components() != 1 || !(a.grid() == b.grid())) {
    throw std::invalid_argument("product: expected two scalar fields on one grid");
  }
  const Grid& grid = a.grid();
  std::vector<double> pa(grid.physical_size()), pb(grid.physical_size());
  const SpectralField da = dealias(a), db = dealias(b);
  to_physical(grid, da.component(0), pa);
  to_physical(grid, db.component(0), pb);
  for (std::size_t i = 0; i < pa.size(); ++i) pa[i] *= pb[i];
  SpectralField out(grid, 1);
  to_spectral(grid, pa, out.component(0));
  return dealias(out);
}

SpectralField tensor_divergence(const SpectralField& u) {
  require_vector(u, "tensor_divergence");
  const Grid& grid = u.grid();
  const int dim = grid.dim();
  const std::size_t npts = grid.physical_size();
  const std::size_t nspec = grid.spectral_size();

  const SpectralField ud = dealias(u);
  std::vector<std::vector<double>> phys(static_cast<std::size_t>(dim), std::vector<double>(npts));
  for (int c = 0; c < dim; ++c) to_physical(grid, ud.component(c), phys[static_cast<std::size_t>(c)]);

  SpectralField out(grid, dim);
  std::vector<double> prod(npts);
  std::vector<Complex> tij(nspec);
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      const auto& pi = phys[static_cast<std::size_t>(i)];
      const auto& pj = phys[static_cast<std::size_t>(j)];
      for (std::size_t p = 0; p < npts; ++p) prod[p] = pi[p] * pj[p];
      to_spectral(grid, prod, tij);
      // (div T)_i += d_j T_ij and, by symmetry, (div T)_j += d_i T_ij.
      auto oi = out.component(i);
      for (std::size_t m = 0; m < nspec; ++m) oi[m] += derivative_symbol(grid, m, j) * tij[m];
      if (j != i) {
        auto oj = out.component(j);
        for (std::size_t m = 0; m < nspec; ++m) oj[m] += derivative_symbol(grid, m, i) * tij[m];
      }
    }
  }
  for (int c = 0; c < dim; ++c) out.component(c)[0] = Complex{0.0, 0.0};
  return dealias(out);
}

SpectralField convection_term(const SpectralField& u) {
  require_vector(u, "convection_term");
  const double div = l2_norm(divergence(u));
  const double scale = std::max(sobolev_norm(u, 1.0), 1e-300);
  if (div > 1e-8 * scale) {
    throw std::invalid_argument("convection_term: input is not divergence-free (relative divergence " +
                                std::to_string(div / scale) + ")");
  }
  return dealias(leray_project(tensor_divergence(u)));
}

}  // namespace hypns
