#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypns/spectral/grid.hpp"
#include "hypns/spectral/spectral_field.hpp"

namespace hypns {

/// Recipe for a synthetic divergence-free field with prescribed roughness.
///
/// `s` is the convergence exponent of the theorems (0 < s < 1). The field is
/// built to sit just inside H^{s + sigma0}, sigma0 = dim/2 - 1, i.e. H^s in 2D
/// and H^{s+1/2} in 3D, by giving it the spectrum |k|^{-(s + sigma0 + dim/2 + margin)}.
struct DataRecipe {
  std::uint64_t seed = 1;
  double s = 0.5;
  int dim = 2;
  double amplitude = 1.0;
  double spectral_slope_margin = 0.01;
};

/// Counter-based uniform draw in [0, 1) keyed by (seed, index).
double hash_uniform(std::uint64_t seed, std::uint64_t index);

/// Critical regularity shift dim/2 - 1 (0 in 2D, 1/2 in 3D).
double critical_shift(int dim);

/// Throws std::invalid_argument if the recipe violates 0 < s < 1,
/// amplitude >= 0 or margin > 0.
void validate(const DataRecipe& recipe);

/// Synthetic divergence-free, mean-free field supported on the dealiased band,
/// with |v_hat(k)| proportional to |k|^{-(s + sigma0 + dim/2 + margin)} and
/// seeded random directions. Rescaled so that ||v||_{H^{s+sigma0}} equals the
/// amplitude. The value at each wavevector depends only on (seed, k), not on n.
SpectralField synth_hs_field(const DataRecipe& recipe, const Grid& grid);

/// Random divergence-free field supported on 0 < |k| <= kmax with seeded
/// Gaussian coefficients. Like synth_hs_field, the coefficient at k depends
/// only on (seed, k), so every grid that resolves the band sees the same field.
SpectralField random_band_field(const Grid& grid, std::uint64_t seed, double kmax);

/// Fourier-truncated initial data for the relaxed system.
struct TruncatedData {
  SpectralField u0;
  SpectralField u1;
};

/// u0 keeps the modes of v0 with |k| < eps^{-1/2}; u1 is zero.
TruncatedData truncate_initial_data(const SpectralField& v0, double eps);

/// ||u0||_{H^sigma-dot} / (eps^{(s - sigma)/2} ||v0||_{H^s-dot}); at most 1 for
/// truncated data. Throws std::domain_error for sigma < s.
double check_bernstein(const SpectralField& v0, const SpectralField& u0, double eps,
                       double sigma, double s);

/// ||u0 - v0||_{H^base-dot} / (eps^{s/2} ||v0||_{H^{base+s}-dot}); at most 1
/// for truncated data. base = 0 gives the L2 form.
double check_jackson(const SpectralField& v0, const SpectralField& u0, double eps, double s,
                     double base = 0.0);

struct HypothesisTerm {
  std::string name;
  double value = 0.0;  // raw left-hand side
  double ratio = 0.0;  // value / (eps^{s/2} ||v0||_{H^{s+sigma0}-dot})
  bool pass = true;
};

struct HypothesisBounds {
  double constant = 1.0;  // bound on each O(eps^{s/2}) ratio
  double o1_bound = 1.0;  // bound on the raw o(1) term
};

struct HypothesisReport {
  int dim = 2;
  double eps = 0.0;
  std::vector<HypothesisTerm> terms;  // the O(eps^{s/2}) block
  HypothesisTerm o1_term;             // eps^{1+delta/2} ||u1||_{H^{sigma0+delta}-dot}
  bool small_data_checked = false;    // 3D only
  double small_data_norm = 0.0;       // ||u0||_{H^{1/2}-dot}
  bool small_data_ok = true;
  bool pass = true;
};

/// Evaluates the admissibility hypotheses of the 2D or 3D convergence theorem.
HypothesisReport check_hypotheses(const SpectralField& u0, const SpectralField& u1,
                                  const SpectralField& v0, double eps, double s, double delta,
                                  int dim, const HypothesisBounds& bounds = {});

/// 2D Taylor-Green field (cos x sin y, -sin x cos y). Throws for 3D grids.
SpectralField taylor_green(const Grid& grid);

}  // namespace hypns
