#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hypns::detail {

namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;
};

// FFTW planning is not thread-safe; execution with the new-array interface is.
// Plans are created once per (dim, n) under the lock and never destroyed.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  const PlanPair& get(const Grid& grid) {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto key = std::make_pair(grid.dim(), grid.n());
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;

    std::vector<double> real(grid.physical_size());
    std::vector<Complex> spec(grid.spectral_size());
    auto* r = real.data();
    auto* c = reinterpret_cast<fftw_complex*>(spec.data());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    PlanPair pair;
    if (grid.dim() == 2) {
      pair.forward = fftw_plan_dft_r2c_2d(grid.n(), grid.n(), r, c, flags);
      pair.inverse = fftw_plan_dft_c2r_2d(grid.n(), grid.n(), c, r, flags | FFTW_DESTROY_INPUT);
    } else {
      pair.forward = fftw_plan_dft_r2c_3d(grid.n(), grid.n(), grid.n(), r, c, flags);
      pair.inverse =
          fftw_plan_dft_c2r_3d(grid.n(), grid.n(), grid.n(), c, r, flags | FFTW_DESTROY_INPUT);
    }
    if (!pair.forward || !pair.inverse) throw std::runtime_error("FFTW planning failed");
    return plans_.emplace(key, pair).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, PlanPair> plans_;
};

}  // namespace

void fft_forward(const Grid& grid, std::span<const double> in, std::span<Complex> out) {
  if (in.size() != grid.physical_size() || out.size() != grid.spectral_size()) {
    throw std::invalid_argument("fft_forward: buffer size mismatch");
  }
  const auto& plan = PlanCache::instance().get(grid);
  // r2c leaves its input untouched.
  fftw_execute_dft_r2c(plan.forward, const_cast<double*>(in.data()),
                       reinterpret_cast<fftw_complex*>(out.data()));
}

void fft_inverse(const Grid& grid, std::span<const Complex> in, std::span<double> out) {
  if (in.size() != grid.spectral_size() || out.size() != grid.physical_size()) {
    throw std::invalid_argument("fft_inverse: buffer size mismatch");
  }
  const auto& plan = PlanCache::instance().get(grid);
  std::vector<Complex> scratch(in.begin(), in.end());
  fftw_execute_dft_c2r(plan.inverse, reinterpret_cast<fftw_complex*>(scratch.data()), out.data());
}

}  // namespace hypns::detail
