#include <cmath>

#include "kernels_impl.hpp"

namespace massplanck::kernels::detail {

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sum_scalar(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i];
  return acc;
}

double trapezoid_scalar(const double* x, const double* y, std::size_t n) {
  if (n < 2) return 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) acc += (x[i + 1] - x[i]) * (y[i] + y[i + 1]);
  return 0.5 * acc;
}

double cosine_sum_scalar(const double* w, std::size_t n, double theta) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += w[i] * std::cos(static_cast<double>(i) * theta);
  return acc;
}

void second_difference_add_scalar(const double* c, std::ptrdiff_t stride, double scale,
                                  double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* p = c + i;
    out[i] += scale * (p[-stride] + p[stride] - 2.0 * p[0]);
  }
}

void scale_divide_scalar(double* out, const double* denom, double factor, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = factor * out[i] / denom[i];
}

void accumulate_power_scalar(const double* z, double* acc, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double re = z[2 * i];
    const double im = z[2 * i + 1];
    acc[i] += re * re + im * im;
  }
}

CentralSums central_sums_scalar(const double* x, std::size_t n, double mean) {
  CentralSums s;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = x[i] - mean;
    const double d2 = d * d;
    s.m2 += d2;
    s.m3 += d2 * d;
    s.m4 += d2 * d2;
  }
  return s;
}

}  // namespace

const KernelTable kScalarTable{
    Backend::Scalar,          dot_scalar,
    sum_scalar,               trapezoid_scalar,
    cosine_sum_scalar,        second_difference_add_scalar,
    scale_divide_scalar,      accumulate_power_scalar,
    central_sums_scalar,
};

}  // namespace massplanck::kernels::detail
