#include "hypns/solvers/nlw_solver.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hypns/errors.hpp"
#include "hypns/solvers/ns_solver.hpp"
#include "hypns/spectral/operators.hpp"

namespace hypns {

namespace {

constexpr double kRootTolerance = 1e-14;
constexpr double kSeriesThreshold = 1e-2;

void require_eps(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("eps must be > 0");
}

// Propagators for every stored mode over one step length.
std::vector<ModePropagator> propagator_table(const Grid& grid, double eps, double t) {
  std::vector<ModePropagator> table(grid.spectral_size());
  for (std::size_t m = 1; m < table.size(); ++m) table[m] = mode_propagator(eps, grid.k2(m), t);
  return table;
}

// Exact solution over one step of eps u'' + u' + k2 u = a + b s, per mode,
// with forcing coefficients a (value at s = 0) and b (slope).
class StepKernel {
 public:
  StepKernel(const Grid& grid, double eps, double h)
      : grid_(grid), h_(h), full_(propagator_table(grid, eps, h)),
        half_(propagator_table(grid, eps, 0.5 * h)) {}

  double h() const { return h_; }

  WaveState step(const WaveState& s) const {
    const SpectralField f0 = projected_nonlinearity(s.u) * -1.0;
    WaveState mid = s;
    advance(s, f0, nullptr, half_, 0.0, mid);
    const SpectralField f1 = projected_nonlinearity(mid.u) * -1.0;
    WaveState next = s;
    advance(s, f0, &f1, full_, h_, next);
    next.t = s.t + h_;
    if (next.u.has_nonfinite() || next.ut.has_nonfinite()) {
      throw NumericalError("nlw_step produced non-finite values", next.t);
    }
    return next;
  }

 private:
  // With f_mid == nullptr the forcing is the constant f0; otherwise it is the
  // line through f0 at s = 0 and f_mid at s = h/2.
  void advance(const WaveState& s, const SpectralField& f0, const SpectralField* f_mid,
               const std::vector<ModePropagator>& prop, double length, WaveState& out) const {
    const double slope_scale = f_mid ? 2.0 / h_ : 0.0;
    const double t = f_mid ? length : 0.5 * h_;
    for (int c = 0; c < s.u.components(); ++c) {
      auto u0 = s.u.component(c);
      auto v0 = s.ut.component(c);
      auto a = f0.component(c);
      auto u1 = out.u.component(c);
      auto v1 = out.ut.component(c);
      u1[0] = v1[0] = Complex{0.0, 0.0};
      for (std::size_t m = 1; m < u0.size(); ++m) {
        const double k2 = grid_.k2(m);
        const Complex b = f_mid ? slope_scale * (f_mid->component(c)[m] - a[m]) : Complex{0.0, 0.0};
        const Complex c1 = b / k2;
        const Complex c0 = (a[m] - c1) / k2;
        const Complex du = u0[m] - c0;
        const Complex dv = v0[m] - c1;
        const ModePropagator& p = prop[m];
        u1[m] = c0 + c1 * t + p.phi0 * du + p.phi1 * dv;
        v1[m] = c1 + p.psi0 * du + p.psi1 * dv;
      }
    }
  }

  Grid grid_;
  double h_;
  std::vector<ModePropagator> full_;
  std::vector<ModePropagator> half_;
};

}  // namespace

ModeRoots mode_roots(double eps, double k2) {
  require_eps(eps);
  if (!(k2 >= 0.0)) throw std::invalid_argument("mode_roots: k2 must be >= 0");
  ModeRoots r;
  r.discriminant = 1.0 - 4.0 * eps * k2;
  if (std::abs(r.discriminant) <= kRootTolerance) {
    r.kind = RootKind::double_root;
    r.lambda_plus = r.lambda_minus = -0.5 / eps;
  } else if (r.discriminant > 0.0) {
    r.kind = RootKind::real_distinct;
    const double lm = -(1.0 + std::sqrt(r.discriminant)) / (2.0 * eps);
    r.lambda_minus = lm;
    r.lambda_plus = k2 / (eps * lm);
  } else {
    r.kind = RootKind::complex_pair;
    const std::complex<double> lm{-1.0, -std::sqrt(-r.discriminant)};
    r.lambda_minus = lm / (2.0 * eps);
    r.lambda_plus = std::conj(r.lambda_minus);
  }
  return r;
}

ModePropagator mode_propagator(double eps, double k2, double t) {
  require_eps(eps);
  if (!(t >= 0.0)) throw std::invalid_argument("mode_propagator: t must be >= 0");
  ModePropagator p;
  if (t == 0.0) return p;

  const double disc = 1.0 - 4.0 * eps * k2;
  const double m = -0.5 / eps;
  const double d2 = disc / (4.0 * eps * eps);
  const double z = d2 * t * t;

  if (std::abs(z) < kSeriesThreshold) {
    // C = cosh(d t), S = sinh(d t) / d as even power series in z = d^2 t^2.
    double c_sum = 0.0, s_sum = 0.0, c_term = 1.0, s_term = 1.0;
    for (int j = 0; j < 12; ++j) {
      c_sum += c_term;
      s_sum += s_term;
      c_term *= z / ((2.0 * j + 1.0) * (2.0 * j + 2.0));
      s_term *= z / ((2.0 * j + 2.0) * (2.0 * j + 3.0));
    }
    const double e = std::exp(m * t);
    const double S = t * s_sum;
    p.phi0 = e * (c_sum - m * S);
    p.phi1 = e * S;
    p.psi1 = e * (c_sum + m * S);
  } else if (disc > 0.0) {
    const ModeRoots r = mode_roots(eps, k2);
    const double lp = r.lambda_plus.real();
    const double lm = r.lambda_minus.real();
    const double x = (lp - lm) * t;
    const double g = -std::expm1(-x) / x;  // (1 - e^{-x}) / x
    const double e = std::exp(lp * t);
    p.phi0 = e * (1.0 - lp * t * g);
    p.phi1 = e * t * g;
    p.psi1 = e * (lp * t * g + std::exp(-x));
  } else {
    const double w = std::sqrt(-disc) / (2.0 * eps);
    const double e = std::exp(m * t);
    const double cw = std::cos(w * t);
    const double sw = std::sin(w * t) / w;
    p.phi0 = e * (cw - m * sw);
    p.phi1 = e * sw;
    p.psi1 = e * (cw + m * sw);
  }
  p.psi0 = -(k2 / eps) * p.phi1;
  return p;
}

WaveState linear_propagate(const WaveState& state, double dt) {
  require_eps(state.eps);
  if (!(dt >= 0.0)) throw std::invalid_argument("linear_propagate: dt must be >= 0");
  WaveState out = state;
  out.t = state.t + dt;
  if (dt == 0.0) return out;
  const Grid& grid = state.u.grid();
  const auto table = propagator_table(grid, state.eps, dt);
  for (int c = 0; c < state.u.components(); ++c) {
    auto u0 = state.u.component(c);
    auto v0 = state.ut.component(c);
    auto u1 = out.u.component(c);
    auto v1 = out.ut.component(c);
    for (std::size_t m = 1; m < u0.size(); ++m) {
      const ModePropagator& p = table[m];
      u1[m] = p.phi0 * u0[m] + p.phi1 * v0[m];
      v1[m] = p.psi0 * u0[m] + p.psi1 * v0[m];
    }
  }
  return out;
}

WaveState nlw_step(const WaveState& state, double dt) {
  require_eps(state.eps);
  if (!(dt > 0.0)) throw std::invalid_argument("nlw_step: dt must be > 0");
  return StepKernel(state.u.grid(), state.eps, dt).step(state);
}

NlwOutcome nlw_solve(const SpectralField& u0, const SpectralField& u1, double eps, double T,
                     double dt, const WaveObserver& observer, const NlwOptions& options) {
  require_eps(eps);
  if (!(u0.grid() == u1.grid()) || u0.components() != u1.components()) {
    throw std::invalid_argument("nlw_solve: u0 and u1 differ in shape");
  }
  if (dt <= 0.0) dt = default_time_step(u0);
  const TimeGrid grid(T, dt);
  NlwOutcome outcome{WaveState{u0, u1, eps, 0.0}, false, 0.0, {}};
  WaveState& state = outcome.state;

  const double monitor0 = options.monitor ? options.monitor(state) : 0.0;
  const double ceiling = options.blowup_factor * monitor0;
  if (observer) observer(state, StepInfo{0, true});

  // Kernels for the nominal step and, if needed, the shortened last step.
  const StepKernel nominal(u0.grid(), eps, grid.nominal_step());
  for (std::size_t i = 0; i < grid.steps(); ++i) {
    const double h = grid.step(i);
    if (h == nominal.h()) {
      state = nominal.step(state);
    } else {
      state = StepKernel(u0.grid(), eps, h).step(state);
    }
    state.t = grid.time(i + 1);
    if (observer) observer(state, StepInfo{i + 1, grid.is_sample(i + 1, options.sample_stride)});
    if (options.monitor) {
      const double value = options.monitor(state);
      if (!std::isfinite(value) || value > ceiling) {
        outcome.blowup = true;
        outcome.blowup_time = state.t;
        outcome.message = "monitored energy exceeded " + std::to_string(options.blowup_factor) +
                          " times its initial value";
        break;
      }
    }
  }
  return outcome;
}

namespace {

int lattice_factor(double eps) {
  require_eps(eps);
  const double root = 1.0 / std::sqrt(eps);
  const long m = std::lround(root);
  if (m < 1 || std::abs(1.0 / (static_cast<double>(m) * static_cast<double>(m)) - eps) > 1e-12 * eps) {
    throw std::invalid_argument("rescale: eps = " + std::to_string(eps) +
                                " is not 1/m^2 for an integer m, so y / sqrt(eps) does not map the "
                                "lattice to itself");
  }
  return static_cast<int>(m);
}

SpectralField map_modes(const SpectralField& f, int m, bool up, double amplitude) {
  const Grid& grid = f.grid();
  const int half = grid.n() / 2;
  SpectralField out(grid, f.components());
  double scale = 0.0;
  for (int c = 0; c < f.components(); ++c) {
    for (const auto& v : f.component(c)) scale = std::max(scale, std::abs(v));
  }
  for (std::size_t mode = 1; mode < grid.spectral_size(); ++mode) {
    const Wavevector& k = grid.wavevector(mode);
    bool divisible = true;
    for (int v : k) divisible = divisible && v % m == 0;
    for (int c = 0; c < f.components(); ++c) {
      const Complex value = f.component(c)[mode];
      if (value == Complex{0.0, 0.0}) continue;
      Wavevector target = k;
      if (up) {
        for (auto& v : target) {
          v *= m;
          if (std::abs(v) >= half) {
            throw std::invalid_argument("rescale: mapped wavevector leaves the resolved lattice");
          }
        }
      } else {
        if (!divisible) {
          if (std::abs(value) > 1e-12 * scale) {
            throw std::invalid_argument("rescale: field is not supported on m Z^d");
          }
          continue;
        }
        for (auto& v : target) v /= m;
      }
      out.set_coefficient(c, target, amplitude * value);
    }
  }
  return out;
}

}  // namespace

WaveState rescale(const WaveState& state, RescaleDirection direction, double eps) {
  const int m = lattice_factor(eps);
  const double md = static_cast<double>(m);
  WaveState out;
  if (direction == RescaleDirection::from_unit) {
    if (std::abs(state.eps - 1.0) > 1e-12) {
      throw std::invalid_argument("rescale(from_unit): state must have eps = 1");
    }
    out.u = map_modes(state.u, m, true, md);
    out.ut = map_modes(state.ut, m, true, md * md * md);
    out.eps = eps;
    out.t = state.t * eps;
  } else {
    if (std::abs(state.eps - eps) > 1e-12 * eps) {
      throw std::invalid_argument("rescale(to_unit): state eps does not match");
    }
    out.u = map_modes(state.u, m, false, 1.0 / md);
    out.ut = map_modes(state.ut, m, false, 1.0 / (md * md * md));
    out.eps = 1.0;
    out.t = state.t / eps;
  }
  return out;
}

}  // namespace hypns
