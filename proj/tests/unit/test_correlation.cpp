#include <doctest.h>

#include <cmath>
#include <vector>

#include "massplanck/constants.hpp"
#include "massplanck/correlation.hpp"
#include "massplanck/errors.hpp"

namespace mp = massplanck;

TEST_CASE("correlation length") {
  const double me = mp::codata2018::electron_mass;
  CHECK(mp::correlation_length(me, 300.0) == doctest::Approx(2.427976e-9).epsilon(1e-6));
  CHECK(mp::correlation_length(me, 1200.0) == doctest::Approx(0.5 * mp::correlation_length(me, 300.0)).epsilon(1e-15));
  CHECK(mp::correlation_length(4.0 * me, 300.0) == doctest::Approx(0.5 * mp::correlation_length(me, 300.0)).epsilon(1e-15));
  CHECK_THROWS_AS(mp::correlation_length(0.0, 300.0), mp::DomainError);
  CHECK_THROWS_AS(mp::correlation_length(me, -1.0), mp::DomainError);
}

TEST_CASE("gaussian spectrum and analytic correlation") {
  CHECK(mp::gaussian_spectrum(0.0, 3.0) == 1.0);
  CHECK(mp::gaussian_spectrum(2.0 / 3.0, 3.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(mp::gaussian_spectrum(-0.7, 3.0) == mp::gaussian_spectrum(0.7, 3.0));
  CHECK(mp::analytic_correlation(0.0, 2.0) == 1.0);
  CHECK(mp::analytic_correlation(2.0, 2.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(mp::analytic_correlation(4.0, 2.0) == doctest::Approx(0.01831563888873418).epsilon(1e-14));
}

TEST_CASE("Fourier pair at several scales") {
  for (double lambda_c : {1e-12, 1e-9, 1e-6, 1.0}) {
    const auto lags = mp::uniform_lags(3.0 * lambda_c, 301);
    const auto g = mp::gaussian_correlation(lambda_c, lags);
    CHECK(g.g_values.front() == doctest::Approx(1.0).epsilon(1e-15));
    double worst = 0.0;
    for (std::size_t i = 0; i < lags.size(); ++i) {
      worst = std::max(worst, std::abs(g.g_values[i] - mp::analytic_correlation(lags[i], lambda_c)));
      if (i > 0) CHECK(g.g_values[i] <= g.g_values[i - 1] + 1e-15);
    }
    CHECK(worst < 1e-6);
    CHECK(g.at(lambda_c) == doctest::Approx(std::exp(-1.0)).epsilon(1e-5));
    REQUIRE(g.crossing(std::exp(-1.0)).has_value());
    CHECK(*g.crossing(std::exp(-1.0)) == doctest::Approx(lambda_c).epsilon(1e-3));
  }
}

TEST_CASE("Parseval: k-space and lag-space norms agree") {
  // ∫G² dξ over the real line = (2π)⁻¹ ∫ S² dk · (2π / ∫S dk)² with G(0) = 1.
  const double lambda_c = 1.0;
  const auto spectrum = mp::ModeSpectrum::gaussian(lambda_c);
  const auto lags = mp::uniform_lags(6.0 * lambda_c, 3001);
  const auto g = mp::correlation_from_spectrum(spectrum, lags);
  const double dxi = lags[1] - lags[0];
  double lag_norm = 0.0;
  for (std::size_t i = 0; i < lags.size(); ++i) {
    const double w = (i == 0 || i + 1 == lags.size()) ? 0.5 : 1.0;
    lag_norm += w * g.g_values[i] * g.g_values[i];
  }
  lag_norm *= 2.0 * dxi;  // even extension
  const double dk = spectrum.k_grid[1] - spectrum.k_grid[0];
  double s1 = 0.0;
  double s2 = 0.0;
  for (std::size_t i = 0; i < spectrum.k_grid.size(); ++i) {
    const double w = (i == 0 || i + 1 == spectrum.k_grid.size()) ? 0.5 : 1.0;
    s1 += w * spectrum.s_values[i];
    s2 += w * spectrum.s_values[i] * spectrum.s_values[i];
  }
  s1 *= 2.0 * dk;
  s2 *= 2.0 * dk;
  const double k_norm = 2.0 * mp::pi * s2 / (s1 * s1);
  CHECK(lag_norm == doctest::Approx(k_norm).epsilon(1e-6));
  CHECK(lag_norm == doctest::Approx(std::sqrt(mp::pi / 2.0)).epsilon(1e-6));
}

TEST_CASE("spectrum validation") {
  auto s = mp::ModeSpectrum::gaussian(1.0, 512, 3.0);  // exp(-2.25) at k_max
  CHECK_THROWS_AS(mp::correlation_from_spectrum(s, mp::uniform_lags(1.0, 5)), mp::InsufficientTail);
  mp::ModeSpectrum tiny{{0.0, 1.0, 2.0}, {1.0, 0.0, 0.0}};
  CHECK_THROWS_AS(tiny.validate(), mp::DomainError);
  auto bent = mp::ModeSpectrum::gaussian(1.0);
  bent.k_grid[100] *= 1.001;
  CHECK_THROWS_AS(bent.validate(), mp::DomainError);
  auto negative = mp::ModeSpectrum::gaussian(1.0);
  negative.s_values[10] = -1.0;
  CHECK_THROWS_AS(negative.validate(), mp::DomainError);
}

TEST_CASE("lag grid") {
  const auto lags = mp::uniform_lags(3.0, 4);
  REQUIRE(lags.size() == 4);
  CHECK(lags[0] == 0.0);
  CHECK(lags[3] == 3.0);
  CHECK(mp::uniform_lags(3.0, 1) == std::vector<double>{0.0});
  CHECK_THROWS_AS(mp::uniform_lags(3.0, 0), mp::DomainError);
}
