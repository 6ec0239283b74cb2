#pragma once

#include <map>
#include <span>
#include <vector>

#include "hypns/spectral/grid.hpp"
#include "hypns/spectral/spectral_field.hpp"

namespace hypns {

/// Result of a forward transform: the mean-free spectral field plus the mean
/// removed from each component.
struct TransformResult {
  SpectralField field;
  std::vector<double> means;
};

/// Forward transform of collocation values. The zero mode is removed and
/// reported in `means`.
TransformResult transform(const PhysicalField& values);
/// Inverse transform to collocation values.
PhysicalField inverse_transform(const SpectralField& field);

/// Applies the multiplier |k|^sigma (Lambda^sigma); the zero mode stays 0.
SpectralField lambda_power(const SpectralField& f, double sigma);

/// Homogeneous Sobolev norm, (sum_k |k|^{2 sigma} |f_hat(k)|^2)^{1/2}.
double sobolev_norm(const SpectralField& f, double sigma);
/// L2 norm over the torus (Parseval-exact in the unitary convention).
double l2_norm(const SpectralField& f);
/// Inhomogeneous H^sigma norm, (||f||_{L2}^2 + ||f||_{H^sigma-dot}^2)^{1/2}.
double inhomogeneous_norm(const SpectralField& f, double sigma);
/// Weighted inner product sum_k |k|^{2 sigma} Re(f_hat conj(g_hat)).
double inner_product(const SpectralField& f, const SpectralField& g, double sigma = 0.0);

/// Maximum over collocation points of the pointwise Euclidean magnitude.
double linf_norm(const SpectralField& f);

/// Norm snapshot of a field.
struct NormSet {
  double l2 = 0.0;
  std::map<double, double> hs;
  double linf = 0.0;
};
NormSet compute_norms(const SpectralField& f, std::span<const double> sigmas);

/// Leray projection f - k (k.f)/|k|^2. Nyquist modes are dropped.
SpectralField leray_project(const SpectralField& f);
/// Spectral divergence sum_i i k_i f_i, returned as a scalar field.
SpectralField divergence(const SpectralField& f);
/// Spectral gradient of a scalar field.
SpectralField gradient(const SpectralField& scalar);
/// Spectral Laplacian, multiplier -|k|^2.
SpectralField laplacian(const SpectralField& f);
/// Zeroes every mode outside the 2/3-rule band.
SpectralField dealias(const SpectralField& f);

/// Dealiased div(u (x) u), i.e. sum_j d_j(u_j u_i), without projection.
/// Equals u.grad(u) for divergence-free u.
SpectralField tensor_divergence(const SpectralField& u);

/// P div(u (x) u), computed pseudo-spectrally with 2/3-rule dealiasing on
/// inputs and output. Throws std::invalid_argument when u is not
/// divergence-free to 1e-8 (relative to its H^1 seminorm).
SpectralField convection_term(const SpectralField& u);

/// Dealiased pointwise product of two scalar fields.
SpectralField product(const SpectralField& a, const SpectralField& b);

}  // namespace hypns
