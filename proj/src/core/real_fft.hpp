#pragma once

// Owning wrapper over a pair of FFTW plans for one real transform length.
// Plans use FFTW_ESTIMATE so the plan (and the output bits) does not depend
// on timing measurements.

#include <fftw3.h>

#include <complex>
#include <cstddef>
#include <span>

namespace massplanck::detail {

class RealFft {
 public:
  explicit RealFft(std::size_t n);
  ~RealFft();
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  std::size_t size() const { return n_; }
  std::size_t spectrum_size() const { return n_ / 2 + 1; }

  std::span<double> real() { return {real_, n_}; }
  // Interleaved (re, im) pairs, spectrum_size() of them.
  std::span<double> spectrum() { return {reinterpret_cast<double*>(spectrum_), 2 * spectrum_size()}; }

  // real() -> spectrum(): X_j = Σ_n x_n e^{-2πijn/N}
  void forward();
  // spectrum() -> real(): x_n = Σ_j X_j e^{+2πijn/N} over the Hermitian
  // completion. Unnormalised. Overwrites spectrum().
  void inverse();

 private:
  std::size_t n_;
  double* real_;
  fftw_complex* spectrum_;
  fftw_plan forward_;
  fftw_plan inverse_;
};

}  // namespace massplanck::detail
