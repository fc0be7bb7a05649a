#include <arm_neon.h>

#include <cmath>

#include "kernels_impl.hpp"

namespace massplanck::kernels::detail {

namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sum_neon(const double* x, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vaddq_f64(acc0, vld1q_f64(x + i));
    acc1 = vaddq_f64(acc1, vld1q_f64(x + i + 2));
  }
  double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) acc += x[i];
  return acc;
}

double trapezoid_neon(const double* x, const double* y, std::size_t n) {
  if (n < 2) return 0.0;
  const std::size_t m = n - 1;
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= m; i += 2) {
    const float64x2_t dx = vsubq_f64(vld1q_f64(x + i + 1), vld1q_f64(x + i));
    const float64x2_t sy = vaddq_f64(vld1q_f64(y + i + 1), vld1q_f64(y + i));
    acc = vfmaq_f64(acc, dx, sy);
  }
  double total = vaddvq_f64(acc);
  for (; i < m; ++i) total += (x[i + 1] - x[i]) * (y[i] + y[i + 1]);
  return 0.5 * total;
}

double cosine_sum_neon(const double* w, std::size_t n, double theta) {
  const float64x2_t rc = vdupq_n_f64(std::cos(2.0 * theta));
  const float64x2_t rs = vdupq_n_f64(std::sin(2.0 * theta));
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  while (i + 2 <= n) {
    const double cs[2] = {std::cos(static_cast<double>(i) * theta),
                          std::cos(static_cast<double>(i + 1) * theta)};
    const double sn[2] = {std::sin(static_cast<double>(i) * theta),
                          std::sin(static_cast<double>(i + 1) * theta)};
    float64x2_t c = vld1q_f64(cs);
    float64x2_t s = vld1q_f64(sn);
    const std::size_t block_end = i + kCosineReseedBlock < n ? i + kCosineReseedBlock : n;
    for (; i + 2 <= block_end; i += 2) {
      acc = vfmaq_f64(acc, vld1q_f64(w + i), c);
      const float64x2_t cn = vfmsq_f64(vmulq_f64(c, rc), s, rs);
      s = vfmaq_f64(vmulq_f64(s, rc), c, rs);
      c = cn;
    }
  }
  double total = vaddvq_f64(acc);
  for (; i < n; ++i) total += w[i] * std::cos(static_cast<double>(i) * theta);
  return total;
}

void second_difference_add_neon(const double* c, std::ptrdiff_t stride, double scale,
                                double* out, std::size_t n) {
  const float64x2_t k = vdupq_n_f64(scale);
  const float64x2_t two = vdupq_n_f64(2.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const double* p = c + i;
    const float64x2_t sum = vaddq_f64(vld1q_f64(p - stride), vld1q_f64(p + stride));
    const float64x2_t d2 = vfmsq_f64(sum, two, vld1q_f64(p));
    vst1q_f64(out + i, vfmaq_f64(vld1q_f64(out + i), k, d2));
  }
  for (; i < n; ++i) {
    const double* p = c + i;
    out[i] += scale * (p[-stride] + p[stride] - 2.0 * p[0]);
  }
}

void scale_divide_neon(double* out, const double* denom, double factor, std::size_t n) {
  const float64x2_t f = vdupq_n_f64(factor);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(out + i, vdivq_f64(vmulq_f64(f, vld1q_f64(out + i)), vld1q_f64(denom + i)));
  }
  for (; i < n; ++i) out[i] = factor * out[i] / denom[i];
}

void accumulate_power_neon(const double* z, double* acc, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2x2_t v = vld2q_f64(z + 2 * i);  // de-interleaves re / im
    const float64x2_t p = vfmaq_f64(vmulq_f64(v.val[0], v.val[0]), v.val[1], v.val[1]);
    vst1q_f64(acc + i, vaddq_f64(vld1q_f64(acc + i), p));
  }
  for (; i < n; ++i) {
    const double re = z[2 * i];
    const double im = z[2 * i + 1];
    acc[i] += re * re + im * im;
  }
}

CentralSums central_sums_neon(const double* x, std::size_t n, double mean) {
  const float64x2_t mu = vdupq_n_f64(mean);
  float64x2_t a2 = vdupq_n_f64(0.0);
  float64x2_t a3 = vdupq_n_f64(0.0);
  float64x2_t a4 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t d = vsubq_f64(vld1q_f64(x + i), mu);
    const float64x2_t d2 = vmulq_f64(d, d);
    a2 = vaddq_f64(a2, d2);
    a3 = vfmaq_f64(a3, d2, d);
    a4 = vfmaq_f64(a4, d2, d2);
  }
  CentralSums s{vaddvq_f64(a2), vaddvq_f64(a3), vaddvq_f64(a4)};
  for (; i < n; ++i) {
    const double d = x[i] - mean;
    const double d2 = d * d;
    s.m2 += d2;
    s.m3 += d2 * d;
    s.m4 += d2 * d2;
  }
  return s;
}

}  // namespace

const KernelTable kNeonTable{
    Backend::Neon,          dot_neon,
    sum_neon,               trapezoid_neon,
    cosine_sum_neon,        second_difference_add_neon,
    scale_divide_neon,      accumulate_power_neon,
    central_sums_neon,
};

}  // namespace massplanck::kernels::detail
