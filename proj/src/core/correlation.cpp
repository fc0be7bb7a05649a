#include "massplanck/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "massplanck/constants.hpp"
#include "massplanck/errors.hpp"
#include "massplanck/kernels.hpp"

namespace massplanck {

void ModeSpectrum::validate() const {
  if (k_grid.size() != s_values.size()) throw DomainError("ModeSpectrum: k_grid/s_values size mismatch");
  if (k_grid.size() < kMinSpectrumPoints) {
    throw DomainError("ModeSpectrum: at least 256 points required, got " +
                      std::to_string(k_grid.size()));
  }
  const double k_max = k_grid.back();
  if (!(k_max > 0.0) || !std::isfinite(k_max)) throw DomainError("ModeSpectrum: k_max must be positive");
  if (std::abs(k_grid.front()) > 1e-12 * k_max) {
    throw DomainError("ModeSpectrum: k_grid must start at 0");
  }
  const double dk = (k_max - k_grid.front()) / static_cast<double>(k_grid.size() - 1);
  for (std::size_t i = 1; i < k_grid.size(); ++i) {
    const double step = k_grid[i] - k_grid[i - 1];
    if (!(step > 0.0) || std::abs(step / dk - 1.0) > 1e-9) {
      throw DomainError("ModeSpectrum: k_grid must be strictly ascending and uniform (index " +
                        std::to_string(i) + ")");
    }
  }
  for (double s : s_values) {
    if (!(s >= 0.0) || !std::isfinite(s)) throw DomainError("ModeSpectrum: s_values must be >= 0");
  }
}

ModeSpectrum ModeSpectrum::gaussian(double lambda_c, std::size_t points, double k_max_factor) {
  if (!(lambda_c > 0.0)) throw DomainError("ModeSpectrum::gaussian: lambda_c must be positive");
  if (points < 2) throw DomainError("ModeSpectrum::gaussian: need at least 2 points");
  ModeSpectrum s;
  s.k_grid.resize(points);
  s.s_values.resize(points);
  const double k_max = k_max_factor / lambda_c;
  for (std::size_t i = 0; i < points; ++i) {
    const double k = k_max * static_cast<double>(i) / static_cast<double>(points - 1);
    s.k_grid[i] = k;
    s.s_values[i] = gaussian_spectrum(k, lambda_c);
  }
  return s;
}

double CorrelationFunction::at(double xi) const {
  if (xi_grid.empty()) return std::numeric_limits<double>::quiet_NaN();
  if (xi <= xi_grid.front()) return g_values.front();
  if (xi >= xi_grid.back()) return g_values.back();
  const auto it = std::upper_bound(xi_grid.begin(), xi_grid.end(), xi);
  const std::size_t j = static_cast<std::size_t>(it - xi_grid.begin());
  const double t = (xi - xi_grid[j - 1]) / (xi_grid[j] - xi_grid[j - 1]);
  return g_values[j - 1] + t * (g_values[j] - g_values[j - 1]);
}

std::optional<double> CorrelationFunction::crossing(double level) const {
  for (std::size_t j = 1; j < g_values.size(); ++j) {
    if (g_values[j - 1] >= level && g_values[j] < level) {
      const double t = (g_values[j - 1] - level) / (g_values[j - 1] - g_values[j]);
      return xi_grid[j - 1] + t * (xi_grid[j] - xi_grid[j - 1]);
    }
  }
  return std::nullopt;
}

double correlation_length(double mass, double temperature) {
  if (!(mass > 0.0) || !std::isfinite(mass)) throw DomainError("correlation_length: mass must be positive");
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw DomainError("correlation_length: temperature must be positive");
  }
  const auto& k = constants();
  return 2.0 * k.hbar / std::sqrt(2.0 * mass * k.k_boltzmann * temperature);
}

double gaussian_spectrum(double k, double lambda_c) {
  const double u = 0.5 * k * lambda_c;
  return std::exp(-u * u);
}

double analytic_correlation(double xi, double lambda_c) {
  const double u = xi / lambda_c;
  return std::exp(-u * u);
}

CorrelationFunction correlation_from_spectrum(const ModeSpectrum& spectrum,
                                              std::span<const double> xi_grid) {
  spectrum.validate();
  const double peak = *std::max_element(spectrum.s_values.begin(), spectrum.s_values.end());
  if (!(peak > 0.0)) throw DomainError("correlation_from_spectrum: spectrum is identically zero");
  if (!(spectrum.s_values.back() < kTailThreshold * peak)) {
    std::ostringstream msg;
    msg << "InsufficientTail: S(k_max)/max S = " << spectrum.s_values.back() / peak
        << " is not below " << kTailThreshold << "; extend k_max";
    throw InsufficientTail(msg.str());
  }

  // Work in θ = Δk·ξ, so the sum is independent of the physical scale.
  const std::size_t n = spectrum.k_grid.size();
  const double dk = spectrum.k_grid.back() / static_cast<double>(n - 1);
  std::vector<double> weights(spectrum.s_values);
  weights.front() *= 0.5;
  weights.back() *= 0.5;
  const auto& kt = kernels::active();
  const double g0 = kt.sum(weights.data(), n);

  CorrelationFunction g;
  g.xi_grid.assign(xi_grid.begin(), xi_grid.end());
  g.g_values.resize(xi_grid.size());
  for (std::size_t j = 0; j < xi_grid.size(); ++j) {
    if (!(xi_grid[j] >= 0.0) || !std::isfinite(xi_grid[j])) {
      throw DomainError("correlation_from_spectrum: lags must be finite and >= 0");
    }
    g.g_values[j] = xi_grid[j] == 0.0 ? 1.0 : kt.cosine_sum(weights.data(), n, dk * xi_grid[j]) / g0;
  }
  g.lambda_c = g.crossing(std::exp(-1.0)).value_or(std::numeric_limits<double>::quiet_NaN());
  return g;
}

CorrelationFunction gaussian_correlation(double lambda_c, std::span<const double> xi_grid) {
  return correlation_from_spectrum(ModeSpectrum::gaussian(lambda_c), xi_grid);
}

std::vector<double> uniform_lags(double xi_max, std::size_t points) {
  if (!(xi_max > 0.0)) throw DomainError("uniform_lags: xi_max must be positive");
  if (points < 1) throw DomainError("uniform_lags: need at least 1 point");
  if (points == 1) return {0.0};
  std::vector<double> xi(points);
  for (std::size_t i = 0; i < points; ++i) {
    xi[i] = xi_max * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  return xi;
}

}  // namespace massplanck
