#include "hypns/spectral/spectral_field.hpp"

#include <cmath>
#include <stdexcept>

namespace hypns {

SpectralField::SpectralField(Grid grid, int components) : grid_(std::move(grid)) {
  if (components < 1) throw std::invalid_argument("field needs at least one component");
  data_.assign(static_cast<std::size_t>(components),
               std::vector<Complex>(grid_.spectral_size(), Complex{0.0, 0.0}));
}

Complex SpectralField::coefficient(int c, const Wavevector& k) const {
  bool conj = false;
  const auto mode = grid_.find_mode(k, &conj);
  if (mode < 0) return {0.0, 0.0};
  const Complex v = data_[static_cast<std::size_t>(c)][static_cast<std::size_t>(mode)];
  return conj ? std::conj(v) : v;
}

void SpectralField::set_coefficient(int c, const Wavevector& k, Complex value) {
  bool conj = false;
  const auto mode = grid_.find_mode(k, &conj);
  if (mode < 0) throw std::out_of_range("wavevector outside the grid lattice");
  auto& comp = data_[static_cast<std::size_t>(c)];
  comp[static_cast<std::size_t>(mode)] = conj ? std::conj(value) : value;

  // Modes on the k_last = 0 or n/2 planes keep both k and -k; mirror the value.
  Wavevector minus{-k[0], -k[1], -k[2]};
  bool conj_minus = false;
  const auto partner = grid_.find_mode(minus, &conj_minus);
  if (partner >= 0 && partner != mode) {
    const Complex pv = std::conj(value);
    comp[static_cast<std::size_t>(partner)] = conj_minus ? std::conj(pv) : pv;
  } else if (partner == mode && conj_minus == conj) {
    // Self-conjugate mode (zero or Nyquist corners): must be real.
    comp[static_cast<std::size_t>(mode)] = Complex{value.real(), 0.0};
  }
}

void SpectralField::require_compatible(const SpectralField& other) const {
  if (!(grid_ == other.grid_) || components() != other.components()) {
    throw std::invalid_argument("field shape mismatch");
  }
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  require_compatible(other);
  for (std::size_t c = 0; c < data_.size(); ++c) {
    auto& a = data_[c];
    const auto& b = other.data_[c];
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  }
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
  require_compatible(other);
  for (std::size_t c = 0; c < data_.size(); ++c) {
    auto& a = data_[c];
    const auto& b = other.data_[c];
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  }
  return *this;
}

SpectralField& SpectralField::operator*=(double scale) {
  for (auto& comp : data_) {
    for (auto& v : comp) v *= scale;
  }
  return *this;
}

SpectralField& SpectralField::axpy(double a, const SpectralField& x) {
  require_compatible(x);
  for (std::size_t c = 0; c < data_.size(); ++c) {
    auto& y = data_[c];
    const auto& xs = x.data_[c];
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * xs[i];
  }
  return *this;
}

bool SpectralField::has_nonfinite() const {
  for (const auto& comp : data_) {
    for (const auto& v : comp) {
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return true;
    }
  }
  return false;
}

PhysicalField::PhysicalField(Grid grid, int components) : grid_(std::move(grid)) {
  if (components < 1) throw std::invalid_argument("field needs at least one component");
  data_.assign(static_cast<std::size_t>(components), std::vector<double>(grid_.physical_size(), 0.0));
}

}  // namespace hypns
