#include "hypns/initial_data.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hypns/spectral/operators.hpp"

namespace hypns {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based uniform in [0, 1) keyed by (seed, k, component).
double counter_uniform(std::uint64_t seed, const Wavevector& k, int component) {
  std::uint64_t h = splitmix64(seed);
  for (int v : k) h = splitmix64(h ^ static_cast<std::uint64_t>(static_cast<std::int64_t>(v) + 0x10000));
  h = splitmix64(h ^ static_cast<std::uint64_t>(component + 1));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Representative of the pair {k, -k}: first nonzero component positive.
bool is_canonical(const Wavevector& k) {
  for (int v : k) {
    if (v > 0) return true;
    if (v < 0) return false;
  }
  return true;
}

}  // namespace

double hash_uniform(std::uint64_t seed, std::uint64_t index) {
  return static_cast<double>(splitmix64(splitmix64(seed) ^ index) >> 11) * 0x1.0p-53;
}

double critical_shift(int dim) { return 0.5 * dim - 1.0; }

void validate(const DataRecipe& recipe) {
  if (!(recipe.s > 0.0 && recipe.s < 1.0)) {
    throw std::invalid_argument("recipe: s must lie in (0, 1)");
  }
  if (recipe.dim != 2 && recipe.dim != 3) throw std::invalid_argument("recipe: dim must be 2 or 3");
  if (!(recipe.amplitude >= 0.0)) throw std::invalid_argument("recipe: amplitude must be >= 0");
  if (!(recipe.spectral_slope_margin > 0.0)) {
    throw std::invalid_argument("recipe: spectral slope margin must be > 0");
  }
}

SpectralField synth_hs_field(const DataRecipe& recipe, const Grid& grid) {
  validate(recipe);
  if (grid.dim() != recipe.dim) throw std::invalid_argument("recipe dimension does not match grid");
  const int dim = grid.dim();
  const double regularity = recipe.s + critical_shift(dim);
  const double slope = regularity + 0.5 * dim + recipe.spectral_slope_margin;

  SpectralField field(grid, dim);
  if (recipe.amplitude == 0.0) return field;

  for (std::size_t m = 1; m < grid.spectral_size(); ++m) {
    if (grid.is_nyquist(m) || !grid.is_resolved(m)) continue;
    const Wavevector& k = grid.wavevector(m);
    const bool canonical = is_canonical(k);
    const Wavevector key = canonical ? k : Wavevector{-k[0], -k[1], -k[2]};

    std::array<Complex, 3> a{};
    for (int c = 0; c < dim; ++c) {
      const double phase = 2.0 * std::numbers::pi * counter_uniform(recipe.seed, key, c);
      a[static_cast<std::size_t>(c)] = std::polar(1.0, phase);
    }
    // Project onto the plane orthogonal to k and normalize the direction.
    Complex kdota{0.0, 0.0};
    for (int c = 0; c < dim; ++c) kdota += static_cast<double>(key[c]) * a[static_cast<std::size_t>(c)];
    const double k2 = grid.k2(m);
    double mag2 = 0.0;
    for (int c = 0; c < dim; ++c) {
      auto& ac = a[static_cast<std::size_t>(c)];
      ac -= static_cast<double>(key[c]) * kdota / k2;
      mag2 += std::norm(ac);
    }
    if (mag2 < 1e-24) continue;
    const double scale = std::pow(k2, -0.5 * slope) / std::sqrt(mag2);
    for (int c = 0; c < dim; ++c) {
      const Complex v = scale * a[static_cast<std::size_t>(c)];
      field.component(c)[m] = canonical ? v : std::conj(v);
    }
  }

  const double norm = inhomogeneous_norm(field, regularity);
  if (norm > 0.0) field *= recipe.amplitude / norm;
  return field;
}

SpectralField random_band_field(const Grid& grid, std::uint64_t seed, double kmax) {
  const int dim = grid.dim();
  SpectralField field(grid, dim);
  for (std::size_t m = 1; m < grid.spectral_size(); ++m) {
    if (grid.is_nyquist(m) || !grid.is_resolved(m) || grid.k2(m) > kmax * kmax) continue;
    const Wavevector& k = grid.wavevector(m);
    const bool canonical = is_canonical(k);
    const Wavevector key = canonical ? k : Wavevector{-k[0], -k[1], -k[2]};
    for (int c = 0; c < dim; ++c) {
      // Box-Muller on two counter draws per component.
      const double r = std::sqrt(-2.0 * std::log1p(-counter_uniform(seed, key, 2 * c)));
      const double phase = 2.0 * std::numbers::pi * counter_uniform(seed, key, 2 * c + 1);
      const Complex v = std::polar(r, phase);
      field.component(c)[m] = canonical ? v : std::conj(v);
    }
  }
  return leray_project(field);
}

TruncatedData truncate_initial_data(const SpectralField& v0, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("truncate_initial_data: eps must be > 0");
  TruncatedData data{v0, SpectralField::zeros_like(v0)};
  const Grid& grid = v0.grid();
  const double cutoff2 = 1.0 / eps;
  for (int c = 0; c < data.u0.components(); ++c) {
    auto comp = data.u0.component(c);
    for (std::size_t m = 0; m < comp.size(); ++m) {
      if (!(grid.k2(m) < cutoff2)) comp[m] = Complex{0.0, 0.0};
    }
  }
  return data;
}

double check_bernstein(const SpectralField& v0, const SpectralField& u0, double eps, double sigma,
                       double s) {
  if (sigma < s) {
    throw std::domain_error("check_bernstein: sigma < s is outside the inequality's range");
  }
  const double lhs = sobolev_norm(u0, sigma);
  if (lhs == 0.0) return 0.0;
  const double rhs = std::pow(eps, 0.5 * (s - sigma)) * sobolev_norm(v0, s);
  return lhs / rhs;
}

double check_jackson(const SpectralField& v0, const SpectralField& u0, double eps, double s,
                     double base) {
  const double lhs = sobolev_norm(u0 - v0, base);
  if (lhs == 0.0) return 0.0;
  const double rhs = std::pow(eps, 0.5 * s) * sobolev_norm(v0, base + s);
  return lhs / rhs;
}

HypothesisReport check_hypotheses(const SpectralField& u0, const SpectralField& u1,
                                  const SpectralField& v0, double eps, double s, double delta,
                                  int dim, const HypothesisBounds& bounds) {
  if (u0.grid().dim() != dim || v0.grid().dim() != dim || u1.grid().dim() != dim) {
    throw std::invalid_argument("check_hypotheses: inconsistent dimension");
  }
  const double base = critical_shift(dim);
  HypothesisReport report;
  report.dim = dim;
  report.eps = eps;

  const double reference = std::pow(eps, 0.5 * s) * sobolev_norm(v0, base + s);
  auto add = [&](std::string name, double value) {
    HypothesisTerm term{std::move(name), value, 0.0, true};
    term.ratio = value == 0.0 ? 0.0 : value / reference;
    term.pass = term.ratio <= bounds.constant;
    report.terms.push_back(term);
  };
  add("|u0-v0|_{H^b}", sobolev_norm(u0 - v0, base));
  add("eps|u1|_{H^b}", eps * sobolev_norm(u1, base));
  add("eps^{1/2}|u0|_{H^{b+1}}", std::sqrt(eps) * sobolev_norm(u0, base + 1.0));
  add("eps^{(1+d)/2}|u0|_{H^{b+1+d}}",
      std::pow(eps, 0.5 * (1.0 + delta)) * sobolev_norm(u0, base + 1.0 + delta));
  add("eps^{d/2}|u0|_{H^{b+d}}", std::pow(eps, 0.5 * delta) * sobolev_norm(u0, base + delta));

  report.o1_term.name = "eps^{1+d/2}|u1|_{H^{b+d}}";
  report.o1_term.value = std::pow(eps, 1.0 + 0.5 * delta) * sobolev_norm(u1, base + delta);
  report.o1_term.ratio = report.o1_term.value;
  report.o1_term.pass = report.o1_term.value <= bounds.o1_bound;

  if (dim == 3) {
    report.small_data_checked = true;
    report.small_data_norm = sobolev_norm(u0, 0.5);
    report.small_data_ok = report.small_data_norm < 1.0 / 16.0;
  }

  report.pass = report.o1_term.pass && report.small_data_ok;
  for (const auto& t : report.terms) report.pass = report.pass && t.pass;
  return report;
}

SpectralField taylor_green(const Grid& grid) {
  if (grid.dim() != 2) throw std::invalid_argument("taylor_green: 2D grid required");
  PhysicalField values(grid, 2);
  const std::size_t n = static_cast<std::size_t>(grid.n());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t p = i * n + j;
      const double x = grid.coordinate(p, 0);
      const double y = grid.coordinate(p, 1);
      values.component(0)[p] = std::cos(x) * std::sin(y);
      values.component(1)[p] = -std::sin(x) * std::cos(y);
    }
  }
  auto field = transform(values).field;
  // Clean roundoff so the field is exactly the four-mode vortex.
  for (int c = 0; c < 2; ++c) {
    auto comp = field.component(c);
    for (std::size_t m = 0; m < comp.size(); ++m) {
      const auto& k = grid.wavevector(m);
      if (!(std::abs(k[0]) == 1 && std::abs(k[1]) == 1)) comp[m] = Complex{0.0, 0.0};
    }
  }
  return field;
}

}  // namespace hypns
