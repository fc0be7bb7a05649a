#pragma once

// Stationary Gaussian random fields with the vacuum-noise spectrum
// S(k) = exp[-(kλ_c/2)²], synthesised on a periodic 1-D lattice, and the
// estimators used to check them (circular autocorrelation, periodogram,
// moment-based Gaussianity).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "massplanck/correlation.hpp"

namespace massplanck {

enum class SpectrumShape {
  Gaussian,  // exp[-(kλ_c/2)²]
  White,     // S ≡ 1; λ_c is ignored
};

struct SamplerConfig {
  std::size_t grid_points = 1024;  // power of two, >= 256
  double extent = 40.0;            // L (m), >= 20 λ_c
  double lambda_c = 1.0;           // m; grid spacing must be <= λ_c/8
  std::uint64_t seed = 20140101;
  std::size_t realizations = 4096;
  SpectrumShape shape = SpectrumShape::Gaussian;

  double spacing() const { return extent / static_cast<double>(grid_points); }

  // Throws ConfigError naming the violated invariant.
  void validate() const;
};

struct NoiseField {
  std::size_t grid_points = 0;
  std::size_t realizations = 0;
  double spacing = 0.0;
  double lambda_c = 0.0;  // 0 for a white field
  std::vector<double> values;  // realizations x grid_points, row-major

  std::span<const double> row(std::size_t r) const {
    return {values.data() + r * grid_points, grid_points};
  }
};

// Spectral synthesis. Each lattice mode k_j = 2πj/L receives an independent
// complex normal coefficient (real at j = 0 and j = N/2) scaled by
// sqrt(S(k_j)); the Hermitian completion is inverse transformed and scaled
// to unit variance. Mode j of realization r draws Philox block
// counter {j, r}, key seed, so output depends only on (config, seed).
NoiseField sample_field(const SamplerConfig& config);

// Target E|X_j|² of the unit-variance field: S(k_j) / Σ_j' w_j' S(k_j'),
// for j = 0 .. N/2.
std::vector<double> target_mode_power(const SamplerConfig& config);

// Averaged circular autocorrelation over realizations, lags 0 .. N/2,
// normalised to 1 at lag 0; lambda_c holds the recovered e⁻¹ lag.
CorrelationFunction empirical_correlation(const NoiseField& field);

// Mean of |FFT(row)_j|² / N² over realizations for j = 0 .. N/2.
std::vector<double> mean_periodogram(const NoiseField& field);

struct GaussianityReport {
  std::size_t samples = 0;  // samples entering the moments
  std::size_t stride = 1;   // lattice stride between them
  double mean = 0.0;
  double variance = 0.0;
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
  double skew_threshold = 0.0;  // 5 sqrt(6/N)
  double kurt_threshold = 0.0;  // 5 sqrt(24/N)
  bool degenerate = false;      // zero variance
  bool skew_pass = false;
  bool kurt_pass = false;
  bool pass = false;
};

// Sample skewness and excess kurtosis against 5σ thresholds for independent
// samples. Correlated lattice values are thinned to a stride of 4λ_c (where
// the correlation is e⁻¹⁶) so the i.i.d. error formulas apply.
GaussianityReport gaussianity_check(const NoiseField& field);

}  // namespace massplanck
