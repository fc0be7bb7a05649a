// Compiled with -mavx2 -mfma; only reached after the runtime CPU check.
#include <immintrin.h>

#include <cmath>

#include "kernels_impl.hpp"

namespace massplanck::kernels::detail {

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sum_avx2(const double* x, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x + i));
    acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(x + i + 4));
  }
  for (; i + 4 <= n; i += 4) acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x + i));
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += x[i];
  return acc;
}

double trapezoid_avx2(const double* x, const double* y, std::size_t n) {
  if (n < 2) return 0.0;
  const std::size_t m = n - 1;  // number of intervals
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(x + i + 1), _mm256_loadu_pd(x + i));
    const __m256d sy = _mm256_add_pd(_mm256_loadu_pd(y + i + 1), _mm256_loadu_pd(y + i));
    acc = _mm256_fmadd_pd(dx, sy, acc);
  }
  double total = hsum(acc);
  for (; i < m; ++i) total += (x[i + 1] - x[i]) * (y[i] + y[i + 1]);
  return 0.5 * total;
}

// Lanes carry cos/sin of (i+j)θ, j = 0..3, advanced by a rotation of 4θ.
double cosine_sum_avx2(const double* w, std::size_t n, double theta) {
  const double c4 = std::cos(4.0 * theta);
  const double s4 = std::sin(4.0 * theta);
  const __m256d rc = _mm256_set1_pd(c4);
  const __m256d rs = _mm256_set1_pd(s4);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  while (i + 4 <= n) {
    alignas(32) double cs[4];
    alignas(32) double sn[4];
    for (int j = 0; j < 4; ++j) {
      const double phase = static_cast<double>(i + static_cast<std::size_t>(j)) * theta;
      cs[j] = std::cos(phase);
      sn[j] = std::sin(phase);
    }
    __m256d c = _mm256_load_pd(cs);
    __m256d s = _mm256_load_pd(sn);
    const std::size_t block_end = i + kCosineReseedBlock < n ? i + kCosineReseedBlock : n;
    for (; i + 4 <= block_end; i += 4) {
      acc = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), c, acc);
      const __m256d cn = _mm256_fmsub_pd(c, rc, _mm256_mul_pd(s, rs));
      s = _mm256_fmadd_pd(s, rc, _mm256_mul_pd(c, rs));
      c = cn;
    }
  }
  double total = hsum(acc);
  for (; i < n; ++i) total += w[i] * std::cos(static_cast<double>(i) * theta);
  return total;
}

void second_difference_add_avx2(const double* c, std::ptrdiff_t stride, double scale,
                                double* out, std::size_t n) {
  const __m256d k = _mm256_set1_pd(scale);
  const __m256d two = _mm256_set1_pd(2.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const double* p = c + i;
    const __m256d lo = _mm256_loadu_pd(p - stride);
    const __m256d hi = _mm256_loadu_pd(p + stride);
    const __m256d mid = _mm256_loadu_pd(p);
    const __m256d d2 = _mm256_fnmadd_pd(two, mid, _mm256_add_pd(lo, hi));
    _mm256_storeu_pd(out + i, _mm256_fmadd_pd(k, d2, _mm256_loadu_pd(out + i)));
  }
  for (; i < n; ++i) {
    const double* p = c + i;
    out[i] += scale * (p[-stride] + p[stride] - 2.0 * p[0]);
  }
}

void scale_divide_avx2(double* out, const double* denom, double factor, std::size_t n) {
  const __m256d f = _mm256_set1_pd(factor);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_mul_pd(f, _mm256_loadu_pd(out + i));
    _mm256_storeu_pd(out + i, _mm256_div_pd(v, _mm256_loadu_pd(denom + i)));
  }
  for (; i < n; ++i) out[i] = factor * out[i] / denom[i];
}

void accumulate_power_avx2(const double* z, double* acc, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_loadu_pd(z + 2 * i);      // r0 i0 r1 i1
    const __m256d b = _mm256_loadu_pd(z + 2 * i + 4);  // r2 i2 r3 i3
    // hadd gives p0 p2 p1 p3; restore order.
    const __m256d p = _mm256_hadd_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b));
    const __m256d ordered = _mm256_permute4x64_pd(p, 0xD8);
    _mm256_storeu_pd(acc + i, _mm256_add_pd(_mm256_loadu_pd(acc + i), ordered));
  }
  for (; i < n; ++i) {
    const double re = z[2 * i];
    const double im = z[2 * i + 1];
    acc[i] += re * re + im * im;
  }
}

CentralSums central_sums_avx2(const double* x, std::size_t n, double mean) {
  const __m256d mu = _mm256_set1_pd(mean);
  __m256d a2 = _mm256_setzero_pd();
  __m256d a3 = _mm256_setzero_pd();
  __m256d a4 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), mu);
    const __m256d d2 = _mm256_mul_pd(d, d);
    a2 = _mm256_add_pd(a2, d2);
    a3 = _mm256_fmadd_pd(d2, d, a3);
    a4 = _mm256_fmadd_pd(d2, d2, a4);
  }
  CentralSums s{hsum(a2), hsum(a3), hsum(a4)};
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

const KernelTable kAvx2Table{
    Backend::Avx2,          dot_avx2,
    sum_avx2,               trapezoid_avx2,
    cosine_sum_avx2,        second_difference_add_avx2,
    scale_divide_avx2,      accumulate_power_avx2,
    central_sums_avx2,
};

}  // namespace massplanck::kernels::detail
