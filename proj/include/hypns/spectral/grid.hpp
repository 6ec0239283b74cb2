#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <vector>

namespace hypns {

/// Integer wavevector; unused trailing components are zero in 2D.
using Wavevector = std::array<int, 3>;

/// Uniform collocation grid on the 2*pi-periodic torus in 2 or 3 dimensions.
///
/// Spectral coefficients use the real-to-complex half-spectrum layout: the
/// last axis stores wavenumbers 0..n/2, the other axes store 0..n/2-1
/// followed by -n/2..-1. Each stored mode other than those on the k_last = 0
/// and k_last = n/2 planes stands for itself and its Hermitian partner, which
/// is reflected in `weight()`.
///
/// Grids are cheap to copy; per-mode tables are shared.
class Grid {
 public:
  /// Throws std::invalid_argument unless dim is 2 or 3 and n is even, n >= 8.
  static Grid make(int dim, int n);

  int dim() const noexcept { return dim_; }
  int n() const noexcept { return n_; }
  double length() const noexcept;

  /// Number of collocation points, n^dim.
  std::size_t physical_size() const noexcept { return physical_size_; }
  /// Number of stored spectral coefficients per component.
  std::size_t spectral_size() const noexcept { return spectral_size_; }
  /// Largest |k_i| retained by the 2/3 rule, floor((n - 1) / 3).
  int dealias_cutoff() const noexcept { return (n_ - 1) / 3; }

  const Wavevector& wavevector(std::size_t mode) const { return tables_->k[mode]; }
  /// |k|^2 of a stored mode.
  double k2(std::size_t mode) const { return tables_->k2[mode]; }
  /// Hermitian multiplicity (1 or 2) used by sums over the full lattice.
  double weight(std::size_t mode) const { return tables_->weight[mode]; }
  /// True when some component of k sits on the Nyquist wavenumber n/2.
  bool is_nyquist(std::size_t mode) const { return tables_->nyquist[mode] != 0; }
  /// True when every |k_i| is within the dealiasing cutoff.
  bool is_resolved(std::size_t mode) const { return tables_->resolved[mode] != 0; }

  /// Physical coordinate of collocation point `index` along `axis`.
  double coordinate(std::size_t index, int axis) const;
  /// Stored mode index holding wavevector k (or its Hermitian partner), or -1
  /// when k is outside the lattice. `conjugated` reports whether the stored
  /// coefficient is the conjugate of the one at k.
  std::ptrdiff_t find_mode(const Wavevector& k, bool* conjugated = nullptr) const;

  friend bool operator==(const Grid& a, const Grid& b) noexcept {
    return a.dim_ == b.dim_ && a.n_ == b.n_;
  }

 private:
  struct Tables {
    std::vector<Wavevector> k;
    std::vector<double> k2;
    std::vector<double> weight;
    std::vector<unsigned char> nyquist;
    std::vector<unsigned char> resolved;
  };

  Grid(int dim, int n);

  int dim_ = 2;
  int n_ = 8;
  std::size_t physical_size_ = 0;
  std::size_t spectral_size_ = 0;
  std::shared_ptr<const Tables> tables_;
};

/// Free-function spelling of Grid::make.
inline Grid make_grid(int dim, int n) { return Grid::make(dim, n); }

}  // namespace hypns
