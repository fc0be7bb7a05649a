#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "massplanck/correlation.hpp"
#include "massplanck/errors.hpp"
#include "massplanck/field_sampler.hpp"

namespace mp = massplanck;

namespace {

mp::SamplerConfig small_config() {
  mp::SamplerConfig c;
  c.grid_points = 512;
  c.extent = 40.0;
  c.lambda_c = 1.0;
  c.realizations = 256;
  c.seed = 7;
  return c;
}

std::string config_error(const mp::SamplerConfig& c) {
  try {
    c.validate();
  } catch (const mp::ConfigError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("config invariants name the violated rule") {
  auto c = small_config();
  CHECK(config_error(c).empty());
  c.extent = 19.0;
  CHECK(config_error(c).find("extent invariant") != std::string::npos);
  c = small_config();
  c.grid_points = 300;
  CHECK(config_error(c).find("grid_points invariant") != std::string::npos);
  c = small_config();
  c.grid_points = 256;
  c.extent = 64.0;  // spacing λ_c/4
  CHECK(config_error(c).find("spacing invariant") != std::string::npos);
  CHECK_THROWS_AS(mp::sample_field(c), mp::ConfigError);
  c = small_config();
  c.realizations = 0;
  CHECK(config_error(c).find("realizations invariant") != std::string::npos);
}

TEST_CASE("same seed gives bit-identical fields; other seeds differ") {
  const auto c = small_config();
  const auto a = mp::sample_field(c);
  const auto b = mp::sample_field(c);
  CHECK(a.values == b.values);
  auto other = c;
  other.seed = 8;
  CHECK(mp::sample_field(other).values != a.values);
  // Realization r does not depend on how many were requested.
  auto fewer = c;
  fewer.realizations = 3;
  const auto f = mp::sample_field(fewer);
  for (std::size_t i = 0; i < c.grid_points; ++i) CHECK(f.row(2)[i] == a.row(2)[i]);
}

TEST_CASE("field has unit variance and stationary moments") {
  auto c = small_config();
  c.realizations = 2048;
  const auto field = mp::sample_field(c);
  const double r = static_cast<double>(c.realizations);
  double total = 0.0;
  bool mean_ok = true;
  bool var_ok = true;
  for (std::size_t i = 0; i < c.grid_points; ++i) {
    double s1 = 0.0;
    double s2 = 0.0;
    for (std::size_t k = 0; k < c.realizations; ++k) {
      const double v = field.row(k)[i];
      s1 += v;
      s2 += v * v;
    }
    const double mean = s1 / r;
    const double var = s2 / r - mean * mean;
    mean_ok = mean_ok && std::abs(mean) < 5.0 / std::sqrt(r);
    var_ok = var_ok && std::abs(var - 1.0) < 5.0 * std::sqrt(2.0 / r);
    total += s2;
  }
  CHECK(mean_ok);
  CHECK(var_ok);
  CHECK(total / (r * static_cast<double>(c.grid_points)) == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("mean periodogram reproduces the target spectrum within 3 standard errors") {
  mp::SamplerConfig c;  // default 1024 points, L = 40 λ_c, 4096 realizations
  const auto field = mp::sample_field(c);
  const auto target = mp::target_mode_power(c);
  const auto measured = mp::mean_periodogram(field);
  REQUIRE(measured.size() == target.size());
  const double r = static_cast<double>(c.realizations);
  std::size_t retained = 0;
  std::size_t outside = 0;
  for (std::size_t j = 0; j < target.size(); ++j) {
    if (target[j] < 1e-12 * target[0]) continue;
    ++retained;
    const bool real_mode = (j == 0 || j + 1 == target.size());
    // χ² with 1 (real modes) or 2 degrees of freedom per realization.
    const double se = target[j] * std::sqrt((real_mode ? 2.0 : 1.0) / r);
    if (std::abs(measured[j] - target[j]) > 3.0 * se) ++outside;
  }
  CHECK(retained > 50);
  CHECK(outside == 0);
}

TEST_CASE("empirical correlation of a Gaussian field") {
  mp::SamplerConfig c;
  const auto g = mp::empirical_correlation(mp::sample_field(c));
  CHECK(g.g_values[0] == 1.0);
  CHECK(g.xi_grid.size() == c.grid_points / 2 + 1);
  for (double xi : {0.5, 1.0, 2.0}) {
    CHECK(std::abs(g.at(xi * c.lambda_c) - mp::analytic_correlation(xi * c.lambda_c, c.lambda_c)) <= 0.02);
  }
  CHECK(g.lambda_c == doctest::Approx(c.lambda_c).epsilon(0.05));
}

TEST_CASE("white field correlation vanishes off zero lag") {
  auto c = small_config();
  c.shape = mp::SpectrumShape::White;
  c.extent = 1.0;  // λ_c checks do not apply
  c.realizations = 1024;
  const auto field = mp::sample_field(c);
  CHECK(field.lambda_c == 0.0);
  const auto g = mp::empirical_correlation(field);
  const double bound = 5.0 / std::sqrt(static_cast<double>(c.grid_points * c.realizations));
  for (std::size_t l = 1; l < 16; ++l) CHECK(std::abs(g.g_values[l]) < bound);
}

TEST_CASE("gaussianity check") {
  auto c = small_config();
  c.grid_points = 1024;
  c.realizations = 1024;  // 2^20 samples
  const auto field = mp::sample_field(c);
  const auto rep = mp::gaussianity_check(field);
  CHECK(rep.stride == static_cast<std::size_t>(std::ceil(4.0 * c.lambda_c / c.spacing())));
  CHECK(rep.samples == (1024 / rep.stride) * 1024);
  CHECK(rep.pass);
  CHECK(rep.skew_threshold == doctest::Approx(5.0 * std::sqrt(6.0 / static_cast<double>(rep.samples))));

  auto copy = field;
  for (double& v : copy.values) v = -v;
  const auto flipped = mp::gaussianity_check(copy);
  CHECK(std::abs(flipped.skewness) == doctest::Approx(std::abs(rep.skewness)).epsilon(1e-12));
  CHECK(flipped.excess_kurtosis == doctest::Approx(rep.excess_kurtosis).epsilon(1e-12));

  for (double& v : copy.values) v = 0.3;
  const auto flat = mp::gaussianity_check(copy);
  CHECK(flat.degenerate);
  CHECK_FALSE(flat.pass);
}

TEST_CASE("white field uses every sample in the moment check") {
  auto c = small_config();
  c.shape = mp::SpectrumShape::White;
  c.realizations = 64;
  const auto rep = mp::gaussianity_check(mp::sample_field(c));
  CHECK(rep.stride == 1);
  CHECK(rep.samples == 512 * 64);
  CHECK(rep.pass);
}
