#include "real_fft.hpp"

#include <mutex>
#include <new>

namespace massplanck::detail {

namespace {
// The FFTW planner is not thread-safe.
std::mutex planner_mutex;
}  // namespace

RealFft::RealFft(std::size_t n) : n_(n) {
  std::lock_guard<std::mutex> lock(planner_mutex);
  real_ = fftw_alloc_real(n_);
  spectrum_ = fftw_alloc_complex(spectrum_size());
  if (real_ == nullptr || spectrum_ == nullptr) {
    fftw_free(real_);
    fftw_free(spectrum_);
    throw std::bad_alloc();
  }
  const int len = static_cast<int>(n_);
  forward_ = fftw_plan_dft_r2c_1d(len, real_, spectrum_, FFTW_ESTIMATE);
  inverse_ = fftw_plan_dft_c2r_1d(len, spectrum_, real_, FFTW_ESTIMATE);
}

RealFft::~RealFft() {
  std::lock_guard<std::mutex> lock(planner_mutex);
  fftw_destroy_plan(forward_);
  fftw_destroy_plan(inverse_);
  fftw_free(real_);
  fftw_free(spectrum_);
}

void RealFft::forward() { fftw_execute(forward_); }
void RealFft::inverse() { fftw_execute(inverse_); }

}  // namespace massplanck::detail
