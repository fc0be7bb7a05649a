#pragma once

// Correlation length, the Gaussian mode spectrum and the even cosine
// transform that maps a spectrum S(k) onto the spatial correlation G(ξ).

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace massplanck {

struct ModeSpectrum {
  std::vector<double> k_grid;    // uniform, ascending, starting at 0
  std::vector<double> s_values;  // S(k) >= 0, even extension implied

  void validate() const;

  // S(k) = exp[-(kλ_c/2)²] sampled on [0, k_max_factor/λ_c].
  static ModeSpectrum gaussian(double lambda_c, std::size_t points = 4096,
                               double k_max_factor = 12.0);
};

struct CorrelationFunction {
  std::vector<double> xi_grid;
  std::vector<double> g_values;  // g(0) = 1
  // Target length for analytic curves; the recovered e⁻¹ lag for estimates
  // (NaN when the lag grid never drops below e⁻¹).
  double lambda_c = 0.0;

  // Linear interpolation; clamps outside the grid.
  double at(double xi) const;
  // First lag where g falls to `level`, by linear interpolation.
  std::optional<double> crossing(double level) const;
};

// 2ħ/sqrt(2 m k_B T)
double correlation_length(double mass, double temperature);

// exp[-(kλ_c/2)²]
double gaussian_spectrum(double k, double lambda_c);

// exp[-(ξ/λ_c)²]
double analytic_correlation(double xi, double lambda_c);

// Spectral values below this fraction of the peak count as a decayed tail.
inline constexpr double kTailThreshold = 1e-12;
inline constexpr std::size_t kMinSpectrumPoints = 256;

// G(ξ) ∝ ∫ cos(kξ) S(k) dk by the trapezoid rule, normalised to G(0) = 1.
// Throws InsufficientTail when S(k_max)/max S >= 1e-12, DomainError on a
// malformed spectrum or negative lags.
CorrelationFunction correlation_from_spectrum(const ModeSpectrum& spectrum,
                                              std::span<const double> xi_grid);

// Gaussian-spectrum shortcut: default grid (4096 points to k = 12/λ_c).
CorrelationFunction gaussian_correlation(double lambda_c, std::span<const double> xi_grid);

// `points` evenly spaced lags on [0, xi_max].
std::vector<double> uniform_lags(double xi_max, std::size_t points);

}  // namespace massplanck
