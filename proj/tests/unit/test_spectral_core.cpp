#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace hypns;
using test::kPi;

namespace {

// Pointwise values of a field by direct summation of its Fourier series,
// independent of the FFT path: f(x) = (2 pi)^{-d/2} sum_k w_k Re(f_hat e^{ikx}).
double direct_value(const SpectralField& f, int c, const std::array<double, 3>& x) {
  const Grid& g = f.grid();
  double total = 0.0;
  auto comp = f.component(c);
  for (std::size_t m = 0; m < comp.size(); ++m) {
    if (comp[m] == Complex{0.0, 0.0}) continue;
    const auto& k = g.wavevector(m);
    double phase = 0.0;
    for (int i = 0; i < g.dim(); ++i) phase += k[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
    total += g.weight(m) * (comp[m] * std::polar(1.0, phase)).real();
  }
  return total / std::pow(2.0 * kPi, 0.5 * g.dim());
}

// Derivative d/dx_j of component c by direct summation.
double direct_derivative(const SpectralField& f, int c, int j, const std::array<double, 3>& x) {
  const Grid& g = f.grid();
  double total = 0.0;
  auto comp = f.component(c);
  for (std::size_t m = 0; m < comp.size(); ++m) {
    if (comp[m] == Complex{0.0, 0.0}) continue;
    const auto& k = g.wavevector(m);
    double phase = 0.0;
    for (int i = 0; i < g.dim(); ++i) phase += k[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
    const Complex ik{0.0, static_cast<double>(k[static_cast<std::size_t>(j)])};
    total += g.weight(m) * (ik * comp[m] * std::polar(1.0, phase)).real();
  }
  return total / std::pow(2.0 * kPi, 0.5 * g.dim());
}

// Field whose only modes satisfy |k_i| <= kmax, random and divergence-free.
SpectralField low_mode_field(const Grid& grid, int kmax, std::mt19937_64& rng) {
  SpectralField f = test::random_div_free(grid, rng);
  for (int c = 0; c < grid.dim(); ++c) {
    auto comp = f.component(c);
    for (std::size_t m = 0; m < comp.size(); ++m) {
      for (int v : grid.wavevector(m)) {
        if (std::abs(v) > kmax) comp[m] = Complex{0.0, 0.0};
      }
    }
  }
  return f;
}

}  // namespace

TEST_CASE("make_grid shapes and lattice") {
  const Grid g = make_grid(2, 8);
  CHECK(g.physical_size() == 64);
  std::set<int> first_axis;
  for (std::size_t m = 0; m < g.spectral_size(); ++m) first_axis.insert(g.wavevector(m)[0]);
  CHECK(first_axis == std::set<int>{-4, -3, -2, -1, 0, 1, 2, 3});
  CHECK(make_grid(3, 16).physical_size() == 4096);
  CHECK(g.length() == doctest::Approx(2.0 * kPi));
  CHECK_THROWS_AS(make_grid(2, 7), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(2, 6), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(4, 8), std::invalid_argument);
}

TEST_CASE("lattice is closed under negation") {
  const Grid g = make_grid(3, 8);
  for (std::size_t m = 0; m < g.spectral_size(); ++m) {
    const auto& k = g.wavevector(m);
    if (g.is_nyquist(m)) continue;
    CHECK(g.find_mode({-k[0], -k[1], -k[2]}) >= 0);
  }
}

TEST_CASE("transform removes and reports the mean") {
  const Grid g = make_grid(2, 16);
  PhysicalField values(g, 1);
  for (auto& v : values.component(0)) v = 5.0;
  const auto result = transform(values);
  CHECK(test::max_abs(result.field) == 0.0);
  CHECK(result.means[0] == doctest::Approx(5.0).epsilon(1e-14));
}

TEST_CASE("cos(3x) has coefficients only at k = (+-3, 0)") {
  const Grid g = make_grid(2, 16);
  PhysicalField values(g, 1);
  for (std::size_t p = 0; p < g.physical_size(); ++p) values.component(0)[p] = std::cos(3.0 * g.coordinate(p, 0));
  const SpectralField f = transform(values).field;
  for (std::size_t m = 0; m < g.spectral_size(); ++m) {
    const auto& k = g.wavevector(m);
    const bool support = std::abs(k[0]) == 3 && k[1] == 0;
    // Unitary convention: cos(3x) = (2 pi)^{-1} (pi e^{3ix} + pi e^{-3ix}).
    if (support) {
      CHECK(std::abs(f.component(0)[m] - Complex{kPi, 0.0}) < 1e-12);
    } else {
      CHECK(std::abs(f.component(0)[m]) < 1e-12);
    }
  }
}

TEST_CASE("round trip and Hermitian symmetry on random fields") {
  std::mt19937_64 rng(11);
  for (int dim : {2, 3}) {
    const Grid g = make_grid(dim, dim == 2 ? 32 : 16);
    PhysicalField values(g, 2);
    std::normal_distribution<double> normal;
    for (int c = 0; c < 2; ++c) {
      for (auto& v : values.component(c)) v = normal(rng);
    }
    const auto result = transform(values);
    const PhysicalField back = inverse_transform(result.field);
    double err = 0.0, scale = 0.0;
    for (int c = 0; c < 2; ++c) {
      for (std::size_t p = 0; p < g.physical_size(); ++p) {
        err = std::max(err, std::abs(back.component(c)[p] + result.means[static_cast<std::size_t>(c)] -
                                     values.component(c)[p]));
        scale = std::max(scale, std::abs(values.component(c)[p]));
      }
    }
    CHECK(err <= 1e-12 * scale);
    for (std::size_t m = 0; m < g.spectral_size(); ++m) {
      const auto& k = g.wavevector(m);
      if (g.is_nyquist(m)) continue;
      const Wavevector minus{-k[0], -k[1], -k[2]};
      CHECK(std::abs(result.field.coefficient(0, minus) - std::conj(result.field.coefficient(0, k))) < 1e-12);
    }
  }
}

TEST_CASE("Parseval: coefficient norm equals quadrature norm") {
  std::mt19937_64 rng(5);
  for (int dim : {2, 3}) {
    const Grid g = make_grid(dim, 16);
    const SpectralField f = test::random_field(g, dim, rng);
    const PhysicalField values = inverse_transform(f);
    double quad = 0.0;
    for (int c = 0; c < dim; ++c) {
      for (double v : values.component(c)) quad += v * v;
    }
    quad *= std::pow(2.0 * kPi, dim) / static_cast<double>(g.physical_size());
    CHECK(l2_norm(f) == doctest::Approx(std::sqrt(quad)).epsilon(1e-12));
  }
}

TEST_CASE("lambda_power multipliers") {
  const Grid g = make_grid(2, 16);
  const SpectralField f = test::single_mode(g, 1, 0, {3, 0, 0});
  const SpectralField g9 = lambda_power(f, 2.0);
  CHECK(std::abs(g9.coefficient(0, {3, 0, 0}) - 9.0 * f.coefficient(0, {3, 0, 0})) < 1e-13);
  CHECK(lambda_power(f, 0.0) == f);

  std::mt19937_64 rng(3);
  const SpectralField r = test::random_field(g, 2, rng);
  CHECK(test::max_abs_diff(lambda_power(lambda_power(r, 1.0), -1.0), r) < 1e-12 * test::max_abs(r));
  const SpectralField neg = lambda_power(r, -1.5);
  CHECK(neg.component(0)[0] == Complex{0.0, 0.0});
}

TEST_CASE("sobolev_norm values") {
  const Grid g = make_grid(2, 16);
  const SpectralField f = test::single_mode(g, 1, 0, {3, 0, 0});
  CHECK(l2_norm(f) == doctest::Approx(1.0));
  CHECK(sobolev_norm(f, 0.5) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  CHECK(sobolev_norm(SpectralField(g, 2), 1.0) == 0.0);
  std::mt19937_64 rng(8);
  const SpectralField r = test::random_field(g, 2, rng);
  CHECK(sobolev_norm(r, 0.0) == l2_norm(r));
  CHECK(inhomogeneous_norm(r, 1.0) ==
        doctest::Approx(std::hypot(l2_norm(r), sobolev_norm(r, 1.0))).epsilon(1e-14));
}

TEST_CASE("linf_norm") {
  const Grid g = make_grid(2, 16);
  CHECK(linf_norm(SpectralField(g, 2)) == 0.0);
  PhysicalField values(g, 2);
  for (std::size_t p = 0; p < g.physical_size(); ++p) values.component(0)[p] = std::cos(g.coordinate(p, 0));
  const SpectralField f = transform(values).field;
  CHECK(linf_norm(f) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(linf_norm(f * -2.5) == doctest::Approx(2.5 * linf_norm(f)).epsilon(1e-14));

  const auto sigmas = std::vector<double>{0.0, 0.5, 1.0};
  const NormSet norms = compute_norms(f, sigmas);
  CHECK(norms.hs.at(0.0) == norms.l2);
  CHECK(norms.linf == linf_norm(f));
}

TEST_CASE("Leray projection") {
  const Grid g = make_grid(2, 16);
  // Gradient of sin x sin y is annihilated.
  PhysicalField phi(g, 1);
  for (std::size_t p = 0; p < g.physical_size(); ++p) {
    phi.component(0)[p] = std::sin(g.coordinate(p, 0)) * std::sin(g.coordinate(p, 1));
  }
  const SpectralField grad = gradient(transform(phi).field);
  CHECK(l2_norm(grad) > 1.0);
  CHECK(l2_norm(leray_project(grad)) < 1e-13);

  std::mt19937_64 rng(21);
  for (int n : {8, 16, 32}) {
    for (int dim : {2, 3}) {
      const Grid grid = make_grid(dim, n);
      const SpectralField f = test::random_field(grid, dim, rng);
      const SpectralField h = test::random_field(grid, dim, rng);
      const SpectralField pf = leray_project(f);
      const double scale = l2_norm(f);
      CHECK(l2_norm(leray_project(pf) - pf) <= 1e-12 * scale);
      CHECK(std::abs(inner_product(pf, h) - inner_product(f, leray_project(h))) <=
            1e-12 * scale * l2_norm(h));
      CHECK(l2_norm(divergence(pf)) <= 1e-12 * scale);
      // Divergence-free input is unchanged.
      CHECK(l2_norm(leray_project(pf) - pf) <= 1e-12 * l2_norm(pf));
    }
  }
}

TEST_CASE("divergence of simple fields") {
  const Grid g = make_grid(2, 16);
  PhysicalField a(g, 2), b(g, 2), cosx(g, 1);
  for (std::size_t p = 0; p < g.physical_size(); ++p) {
    const double x = g.coordinate(p, 0), y = g.coordinate(p, 1);
    a.component(0)[p] = std::sin(y);
    b.component(0)[p] = std::sin(x);
    cosx.component(0)[p] = std::cos(x);
  }
  CHECK(l2_norm(divergence(transform(a).field)) < 1e-13);
  const SpectralField d = divergence(transform(b).field);
  CHECK(l2_norm(d - transform(cosx).field) < 1e-12);
}

TEST_CASE("tensor_divergence matches a direct physical-space evaluation of (u . grad) u") {
  std::mt19937_64 rng(4);
  for (int dim : {2, 3}) {
    const Grid g = make_grid(dim, dim == 2 ? 24 : 16);
    // Products of |k_i| <= 2 modes stay inside the dealiased band, so the
    // pseudo-spectral result is exact.
    const SpectralField u = low_mode_field(g, 2, rng);
    PhysicalField adv(g, dim);
    for (std::size_t p = 0; p < g.physical_size(); ++p) {
      std::array<double, 3> x{};
      for (int i = 0; i < dim; ++i) x[static_cast<std::size_t>(i)] = g.coordinate(p, i);
      for (int i = 0; i < dim; ++i) {
        double s = 0.0;
        for (int j = 0; j < dim; ++j) s += direct_value(u, j, x) * direct_derivative(u, i, j, x);
        adv.component(i)[p] = s;
      }
    }
    const SpectralField want = transform(adv).field;
    const SpectralField got = tensor_divergence(u);
    CHECK(test::max_abs_diff(got, want) <= 1e-12 * test::max_abs(want));
  }
}

TEST_CASE("convection_term") {
  const Grid g = make_grid(2, 32);
  CHECK(test::max_abs(convection_term(SpectralField(g, 2))) == 0.0);

  // Taylor-Green: (u . grad) u = -1/4 grad(cos 2x + cos 2y), removed by P.
  PhysicalField tg(g, 2);
  for (std::size_t p = 0; p < g.physical_size(); ++p) {
    const double x = g.coordinate(p, 0), y = g.coordinate(p, 1);
    tg.component(0)[p] = std::cos(x) * std::sin(y);
    tg.component(1)[p] = -std::sin(x) * std::cos(y);
  }
  const SpectralField u = transform(tg).field;
  CHECK(l2_norm(tensor_divergence(u)) > 0.1);
  CHECK(l2_norm(convection_term(u)) < 1e-10);

  // A mode at the dealiasing edge produces nothing beyond the cutoff.
  const int kc = g.dealias_cutoff();
  const SpectralField edge = leray_project(test::single_mode(g, 2, 1, {kc, 1, 0}) +
                                           test::single_mode(g, 2, 0, {1, kc, 0}));
  const SpectralField out = convection_term(edge);
  for (int c = 0; c < 2; ++c) {
    for (std::size_t m = 0; m < g.spectral_size(); ++m) {
      if (!g.is_resolved(m)) CHECK(out.component(c)[m] == Complex{0.0, 0.0});
    }
  }

  std::mt19937_64 rng(17);
  const SpectralField r = test::random_div_free(g, rng);
  const SpectralField base = convection_term(r);
  CHECK(test::max_abs_diff(convection_term(r * 3.0), base * 9.0) <= 1e-10 * 9.0 * test::max_abs(base));

  const SpectralField not_div_free = test::single_mode(g, 2, 0, {2, 0, 0});
  CHECK_THROWS_AS(convection_term(not_div_free), std::invalid_argument);
}

TEST_CASE("Gagliardo-Nirenberg on the lattice: |f|_1^2 <= |f|_{1/2} |f|_{3/2}") {
  std::mt19937_64 rng(99);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const int dim = i % 2 ? 3 : 2;
    const Grid g = make_grid(dim, dim == 2 ? 32 : 16);
    const SpectralField f = i % 3 ? test::random_field(g, dim, rng) : test::random_smooth_field(g, rng, 1.5);
    const double h1 = sobolev_norm(f, 1.0);
    worst = std::max(worst, h1 * h1 / (sobolev_norm(f, 0.5) * sobolev_norm(f, 1.5)));
  }
  CHECK(worst <= 1.0 + 1e-12);
}

TEST_CASE("shape mismatches are rejected") {
  const SpectralField a(make_grid(2, 8), 2);
  const SpectralField b(make_grid(2, 16), 2);
  CHECK_THROWS_AS(inner_product(a, b), std::invalid_argument);
  CHECK_THROWS(a + b);
  CHECK_THROWS_AS(divergence(SpectralField(make_grid(2, 8), 1)), std::invalid_argument);
}
