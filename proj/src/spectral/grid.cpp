#include "hypns/spectral/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hypns {

namespace {

int signed_wavenumber(int index, int n) { return index < n / 2 ? index : index - n; }

}  // namespace

Grid Grid::make(int dim, int n) {
  if (dim != 2 && dim != 3) {
    throw std::invalid_argument("grid dimension must be 2 or 3, got " + std::to_string(dim));
  }
  if (n % 2 != 0) {
    throw std::invalid_argument("grid size n must be even, got " + std::to_string(n));
  }
  if (n < 8) {
    throw std::invalid_argument("grid size n must be at least 8, got " + std::to_string(n));
  }
  return Grid(dim, n);
}

Grid::Grid(int dim, int n) : dim_(dim), n_(n) {
  const std::size_t nn = static_cast<std::size_t>(n);
  const std::size_t half = nn / 2 + 1;
  physical_size_ = dim == 2 ? nn * nn : nn * nn * nn;
  spectral_size_ = dim == 2 ? nn * half : nn * nn * half;

  auto tables = std::make_shared<Tables>();
  tables->k.resize(spectral_size_);
  tables->k2.resize(spectral_size_);
  tables->weight.resize(spectral_size_);
  tables->nyquist.resize(spectral_size_);
  tables->resolved.resize(spectral_size_);

  const int cutoff = dealias_cutoff();
  const std::size_t outer = dim == 2 ? 1 : nn;
  std::size_t mode = 0;
  for (std::size_t a = 0; a < outer; ++a) {
    for (std::size_t b = 0; b < nn; ++b) {
      for (std::size_t c = 0; c < half; ++c, ++mode) {
        Wavevector k{0, 0, 0};
        bool nyq = false;
        if (dim == 2) {
          k[0] = signed_wavenumber(static_cast<int>(b), n);
          k[1] = static_cast<int>(c);
          nyq = (static_cast<int>(b) == n / 2) || (static_cast<int>(c) == n / 2);
        } else {
          k[0] = signed_wavenumber(static_cast<int>(a), n);
          k[1] = signed_wavenumber(static_cast<int>(b), n);
          k[2] = static_cast<int>(c);
          nyq = (static_cast<int>(a) == n / 2) || (static_cast<int>(b) == n / 2) ||
                (static_cast<int>(c) == n / 2);
        }
        tables->k[mode] = k;
        tables->k2[mode] = static_cast<double>(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
        tables->weight[mode] = (c == 0 || static_cast<int>(c) == n / 2) ? 1.0 : 2.0;
        tables->nyquist[mode] = nyq ? 1 : 0;
        tables->resolved[mode] =
            (std::abs(k[0]) <= cutoff && std::abs(k[1]) <= cutoff && std::abs(k[2]) <= cutoff) ? 1
                                                                                                : 0;
      }
    }
  }
  tables_ = std::move(tables);
}

double Grid::length() const noexcept { return 2.0 * std::numbers::pi; }

double Grid::coordinate(std::size_t index, int axis) const {
  const std::size_t nn = static_cast<std::size_t>(n_);
  std::size_t i = index;
  // Row-major with the last axis fastest.
  const int last = dim_ - 1;
  for (int ax = last; ax > axis; --ax) i /= nn;
  return length() * static_cast<double>(i % nn) / static_cast<double>(n_);
}

std::ptrdiff_t Grid::find_mode(const Wavevector& k_in, bool* conjugated) const {
  Wavevector k = k_in;
  const int last = dim_ - 1;
  bool conj = false;
  if (k[last] < 0) {
    for (int i = 0; i < dim_; ++i) k[i] = -k[i];
    conj = true;
  }
  const int h = n_ / 2;
  for (int i = 0; i < dim_; ++i) {
    if (i == last) {
      if (k[i] > h) return -1;
    } else if (k[i] < -h || k[i] >= h) {
      // -n/2 is stored; +n/2 aliases onto it.
      if (k[i] == h) {
        k[i] = -h;
      } else {
        return -1;
      }
    }
  }
  const std::size_t nn = static_cast<std::size_t>(n_);
  const std::size_t half = nn / 2 + 1;
  auto idx = [&](int kk) { return static_cast<std::size_t>(kk < 0 ? kk + n_ : kk); };
  std::size_t mode = 0;
  if (dim_ == 2) {
    mode = idx(k[0]) * half + static_cast<std::size_t>(k[1]);
  } else {
    mode = (idx(k[0]) * nn + idx(k[1])) * half + static_cast<std::size_t>(k[2]);
  }
  if (conjugated) *conjugated = conj;
  return static_cast<std::ptrdiff_t>(mode);
}

}  // namespace hypns
