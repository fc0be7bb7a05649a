#include "massplanck/field_sampler.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "massplanck/constants.hpp"
#include "massplanck/errors.hpp"
#include "massplanck/kernels.hpp"
#include "massplanck/philox.hpp"
#include "real_fft.hpp"

namespace massplanck {

namespace {

constexpr double kDecorrelationLags = 4.0;  // in units of λ_c

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::vector<double> lattice_spectrum(const SamplerConfig& config) {
  const std::size_t modes = config.grid_points / 2 + 1;
  std::vector<double> s(modes, 1.0);
  if (config.shape == SpectrumShape::Gaussian) {
    for (std::size_t j = 0; j < modes; ++j) {
      const double k = 2.0 * pi * static_cast<double>(j) / config.extent;
      s[j] = gaussian_spectrum(k, config.lambda_c);
    }
  }
  return s;
}

// Field variance contributed by mode j: DC and Nyquist once, the rest as ±k pairs.
double total_power(const std::vector<double>& s) {
  double total = s.front() + s.back();
  for (std::size_t j = 1; j + 1 < s.size(); ++j) total += 2.0 * s[j];
  return total;
}

}  // namespace

void SamplerConfig::validate() const {
  if (grid_points < 256 || !is_power_of_two(grid_points)) {
    throw ConfigError("grid_points invariant: must be a power of two >= 256, got " +
                      std::to_string(grid_points));
  }
  if (realizations < 1) throw ConfigError("realizations invariant: must be >= 1");
  if (!(extent > 0.0) || !std::isfinite(extent)) {
    throw ConfigError("extent invariant: L must be positive and finite");
  }
  if (shape == SpectrumShape::White) return;
  if (!(lambda_c > 0.0) || !std::isfinite(lambda_c)) {
    throw ConfigError("lambda_c invariant: must be positive and finite");
  }
  if (extent < 20.0 * lambda_c) {
    std::ostringstream msg;
    msg << "extent invariant: L >= 20 lambda_c required, got L/lambda_c = " << extent / lambda_c;
    throw ConfigError(msg.str());
  }
  if (spacing() > lambda_c / 8.0) {
    std::ostringstream msg;
    msg << "spacing invariant: L/grid_points <= lambda_c/8 required, got spacing/lambda_c = "
        << spacing() / lambda_c;
    throw ConfigError(msg.str());
  }
}

std::vector<double> target_mode_power(const SamplerConfig& config) {
  config.validate();
  std::vector<double> s = lattice_spectrum(config);
  const double total = total_power(s);
  for (double& v : s) v /= total;
  return s;
}

NoiseField sample_field(const SamplerConfig& config) {
  config.validate();
  const std::size_t n = config.grid_points;
  const std::size_t modes = n / 2 + 1;

  const std::vector<double> s = lattice_spectrum(config);
  const double norm = 1.0 / std::sqrt(total_power(s));
  std::vector<double> amplitude(modes);
  for (std::size_t j = 0; j < modes; ++j) {
    const bool real_mode = (j == 0 || j == modes - 1);
    amplitude[j] = norm * std::sqrt(real_mode ? s[j] : 0.5 * s[j]);
  }

  NoiseField field;
  field.grid_points = n;
  field.realizations = config.realizations;
  field.spacing = config.spacing();
  field.lambda_c = config.shape == SpectrumShape::White ? 0.0 : config.lambda_c;
  field.values.resize(n * config.realizations);

  detail::RealFft fft(n);
  const auto key = Philox4x32::key_from_seed(config.seed);
  for (std::size_t r = 0; r < config.realizations; ++r) {
    auto spec = fft.spectrum();
    for (std::size_t j = 0; j < modes; ++j) {
      const auto z = normal_pair(Philox4x32::generate(Philox4x32::counter(j, r), key));
      const bool real_mode = (j == 0 || j == modes - 1);
      spec[2 * j] = amplitude[j] * z[0];
      spec[2 * j + 1] = real_mode ? 0.0 : amplitude[j] * z[1];
    }
    fft.inverse();
    const auto out = fft.real();
    std::copy(out.begin(), out.end(), field.values.begin() + static_cast<std::ptrdiff_t>(r * n));
  }
  return field;
}

std::vector<double> mean_periodogram(const NoiseField& field) {
  const std::size_t n = field.grid_points;
  if (field.realizations == 0 || n < 2) throw DomainError("mean_periodogram: empty field");
  detail::RealFft fft(n);
  std::vector<double> power(fft.spectrum_size(), 0.0);
  const auto& k = kernels::active();
  for (std::size_t r = 0; r < field.realizations; ++r) {
    const auto row = field.row(r);
    std::copy(row.begin(), row.end(), fft.real().begin());
    fft.forward();
    k.accumulate_power(fft.spectrum().data(), power.data(), power.size());
  }
  const double scale = 1.0 / (static_cast<double>(field.realizations) * static_cast<double>(n) *
                              static_cast<double>(n));
  for (double& p : power) p *= scale;
  return power;
}

CorrelationFunction empirical_correlation(const NoiseField& field) {
  const std::size_t n = field.grid_points;
  // Wiener–Khinchin: the circular autocorrelation is the inverse transform
  // of the summed periodogram.
  std::vector<double> power = mean_periodogram(field);
  detail::RealFft fft(n);
  auto spec = fft.spectrum();
  for (std::size_t j = 0; j < power.size(); ++j) {
    spec[2 * j] = power[j];
    spec[2 * j + 1] = 0.0;
  }
  fft.inverse();
  const auto acf = fft.real();

  CorrelationFunction g;
  const std::size_t lags = n / 2 + 1;
  g.xi_grid.resize(lags);
  g.g_values.resize(lags);
  const double zero_lag = acf[0];
  for (std::size_t l = 0; l < lags; ++l) {
    g.xi_grid[l] = static_cast<double>(l) * field.spacing;
    g.g_values[l] = l == 0 ? 1.0 : acf[l] / zero_lag;
  }
  g.lambda_c = g.crossing(std::exp(-1.0)).value_or(std::numeric_limits<double>::quiet_NaN());
  return g;
}

GaussianityReport gaussianity_check(const NoiseField& field) {
  GaussianityReport rep;
  const std::size_t n = field.grid_points;
  std::size_t stride = 1;
  if (field.lambda_c > 0.0 && field.spacing > 0.0) {
    stride = static_cast<std::size_t>(std::ceil(kDecorrelationLags * field.lambda_c / field.spacing));
    if (stride < 1) stride = 1;
    if (stride > n) stride = n;
  }
  const std::size_t per_row = n / stride;
  std::vector<double> picked;
  picked.reserve(per_row * field.realizations);
  for (std::size_t r = 0; r < field.realizations; ++r) {
    const auto row = field.row(r);
    for (std::size_t i = 0; i < per_row; ++i) picked.push_back(row[i * stride]);
  }

  rep.stride = stride;
  rep.samples = picked.size();
  if (picked.empty()) {
    rep.degenerate = true;
    return rep;
  }
  const double count = static_cast<double>(picked.size());
  rep.skew_threshold = 5.0 * std::sqrt(6.0 / count);
  rep.kurt_threshold = 5.0 * std::sqrt(24.0 / count);

  rep.mean = kernels::sum(picked) / count;
  const auto sums = kernels::central_sums(picked, rep.mean);
  rep.variance = sums.m2 / count;
  // Rounding in the mean leaves ~ulp-sized residuals for a constant field.
  const double floor = 1e-12 * std::abs(rep.mean);
  if (!(rep.variance > floor * floor)) {
    rep.degenerate = true;
    return rep;
  }
  rep.skewness = (sums.m3 / count) / std::pow(rep.variance, 1.5);
  rep.excess_kurtosis = (sums.m4 / count) / (rep.variance * rep.variance) - 3.0;
  rep.skew_pass = std::abs(rep.skewness) < rep.skew_threshold;
  rep.kurt_pass = std::abs(rep.excess_kurtosis) < rep.kurt_threshold;
  rep.pass = rep.skew_pass && rep.kurt_pass;
  return rep;
}

}  // namespace massplanck
