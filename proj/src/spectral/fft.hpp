#pragma once

#include <span>

#include "hypns/spectral/grid.hpp"
#include "hypns/spectral/spectral_field.hpp"

namespace hypns::detail {

// Unnormalized FFTW real-to-complex transform of one component.
void fft_forward(const Grid& grid, std::span<const double> in, std::span<Complex> out);
// Unnormalized complex-to-real transform; `in` is not modified.
void fft_inverse(const Grid& grid, std::span<const Complex> in, std::span<double> out);

}  // namespace hypns::detail
