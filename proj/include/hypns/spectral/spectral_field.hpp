#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "hypns/spectral/grid.hpp"

namespace hypns {

using Complex = std::complex<double>;

/// Real field on the torus stored by its Fourier coefficients.
///
/// Coefficients follow the unitary convention
///   f(x) = (2 pi)^{-dim/2} sum_k f_hat(k) exp(i k.x),
/// so the L2 norm over the torus equals the l2 norm of the coefficients.
/// Vector fields carry `dim` components, scalar fields one.
class SpectralField {
 public:
  SpectralField() = default;
  SpectralField(Grid grid, int components);

  static SpectralField zeros_like(const SpectralField& other) {
    return SpectralField(other.grid_, other.components());
  }

  const Grid& grid() const noexcept { return grid_; }
  int components() const noexcept { return static_cast<int>(data_.size()); }
  bool empty() const noexcept { return data_.empty(); }

  std::span<Complex> component(int c) { return data_[static_cast<std::size_t>(c)]; }
  std::span<const Complex> component(int c) const { return data_[static_cast<std::size_t>(c)]; }

  /// Coefficient at wavevector k (Hermitian partner resolved), zero if k is
  /// not on the lattice.
  Complex coefficient(int c, const Wavevector& k) const;
  /// Sets the coefficient at k and keeps the stored partner consistent.
  void set_coefficient(int c, const Wavevector& k, Complex value);

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator-=(const SpectralField& other);
  SpectralField& operator*=(double scale);
  /// this += a * x
  SpectralField& axpy(double a, const SpectralField& x);

  friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
  friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
  friend SpectralField operator*(double s, SpectralField a) { return a *= s; }
  friend SpectralField operator*(SpectralField a, double s) { return a *= s; }

  /// True if any coefficient is NaN or infinite.
  bool has_nonfinite() const;

  friend bool operator==(const SpectralField&, const SpectralField&) = default;

 private:
  void require_compatible(const SpectralField& other) const;

  Grid grid_ = Grid::make(2, 8);
  std::vector<std::vector<Complex>> data_;
};

/// Collocation values of a field, row-major with the last axis fastest.
class PhysicalField {
 public:
  PhysicalField() = default;
  PhysicalField(Grid grid, int components);

  const Grid& grid() const noexcept { return grid_; }
  int components() const noexcept { return static_cast<int>(data_.size()); }

  std::span<double> component(int c) { return data_[static_cast<std::size_t>(c)]; }
  std::span<const double> component(int c) const { return data_[static_cast<std::size_t>(c)]; }

 private:
  Grid grid_ = Grid::make(2, 8);
  std::vector<std::vector<double>> data_;
};

}  // namespace hypns
