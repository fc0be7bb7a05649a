#pragma once

// Data-parallel inner loops shared by the numerical modules. Every kernel has
// a scalar reference implementation; vector variants (AVX2+FMA on x86-64,
// NEON on AArch64) are selected once at startup from the running CPU. The
// variants may reassociate sums, so results agree with the reference to a
// few ulps per term rather than bit-for-bit.

#include <cstddef>
#include <span>
#include <string_view>

namespace massplanck::kernels {

enum class Backend { Scalar, Avx2, Neon };

std::string_view to_string(Backend backend);

struct CentralSums {
  double m2 = 0.0;  // Σ (x - mean)^2
  double m3 = 0.0;  // Σ (x - mean)^3
  double m4 = 0.0;  // Σ (x - mean)^4
};

struct KernelTable {
  Backend backend;
  // Σ a[i] b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // Σ x[i]
  double (*sum)(const double* x, std::size_t n);
  // Σ_{i<n-1} (x[i+1]-x[i]) (y[i]+y[i+1]) / 2, arbitrary (monotone) abscissae
  double (*trapezoid)(const double* x, const double* y, std::size_t n);
  // Σ w[i] cos(i θ)
  double (*cosine_sum)(const double* w, std::size_t n, double theta);
  // out[i] += scale * (c[i-stride] + c[i+stride] - 2 c[i]); c points at the first centre
  void (*second_difference_add)(const double* c, std::ptrdiff_t stride, double scale, double* out,
                                std::size_t n);
  // out[i] = factor * out[i] / denom[i]
  void (*scale_divide)(double* out, const double* denom, double factor, std::size_t n);
  // acc[i] += re[i]^2 + im[i]^2 for interleaved (re, im) pairs
  void (*accumulate_power)(const double* interleaved, double* acc, std::size_t n);
  CentralSums (*central_sums)(const double* x, std::size_t n, double mean);
};

const KernelTable& scalar_table();
// nullptr when the variant is not compiled in or the CPU lacks the feature.
const KernelTable* avx2_table();
const KernelTable* neon_table();

// Best table for this CPU. Fixed after first call.
const KernelTable& active();

inline double dot(std::span<const double> a, std::span<const double> b) {
  return active().dot(a.data(), b.data(), a.size() < b.size() ? a.size() : b.size());
}
inline double sum(std::span<const double> x) { return active().sum(x.data(), x.size()); }
inline double trapezoid(std::span<const double> x, std::span<const double> y) {
  return active().trapezoid(x.data(), y.data(), x.size() < y.size() ? x.size() : y.size());
}
inline double cosine_sum(std::span<const double> w, double theta) {
  return active().cosine_sum(w.data(), w.size(), theta);
}
inline CentralSums central_sums(std::span<const double> x, double mean) {
  return active().central_sums(x.data(), x.size(), mean);
}

}  // namespace massplanck::kernels
