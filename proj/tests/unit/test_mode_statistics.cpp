#include <doctest.h>

#include <cmath>

#include "massplanck/constants.hpp"
#include "massplanck/correlation.hpp"
#include "massplanck/errors.hpp"
#include "massplanck/mode_statistics.hpp"

namespace mp = massplanck;

namespace {

const auto& K = mp::constants();

// State with mc²/kT = mu at 300 K.
mp::ThermalState state_with_mu(double mu, double gamma = 1.0) {
  const double t = 300.0;
  return {mu * K.k_boltzmann * t / (K.c * K.c), t, gamma};
}

// Wavelength at which (ħ/mc)(2π/λ) = r.
double lambda_at_ratio(double r, const mp::ThermalState& s) { return 2.0 * mp::pi * K.hbar / (s.mass * K.c * r); }

// Wavelength at which E/kT = target for the γ = 1 branch with the given mu.
double lambda_at_reduced(double target, double mu, const mp::ThermalState& s) {
  const double q = target / mu;
  return lambda_at_ratio(std::sqrt(1.0 - q * q), s);
}

}  // namespace

TEST_CASE("massive mode energy") {
  const auto s = state_with_mu(50.0);
  const double rest = s.mass * K.c * K.c;
  CHECK(mp::mode_energy_massive(lambda_at_ratio(0.6, s), s) == doctest::Approx(0.8 * rest).epsilon(1e-14));
  CHECK(mp::mode_energy_massive(1e30, s) == doctest::Approx(rest).epsilon(1e-15));
  const double critical = 2.0 * mp::pi * K.hbar / (s.mass * K.c);
  try {
    (void)mp::mode_energy_massive(critical, s);
    FAIL("expected ImaginaryEnergy");
  } catch (const mp::ImaginaryEnergy& e) {
    CHECK(e.critical_wavelength() == doctest::Approx(critical).epsilon(1e-15));
  }
  CHECK_THROWS_AS(mp::mode_energy_massive(1.0, {0.0, 300.0, 1.0}), mp::WrongBranch);
  const auto fast = state_with_mu(50.0, 2.0);
  CHECK(mp::mode_energy_massive(1e30, fast) == doctest::Approx(2.0 * rest).epsilon(1e-15));
}

TEST_CASE("mode_energy dispatches on the branch") {
  const auto photon = mp::mode_energy(1e-6, {0.0, 300.0, 1.0});
  CHECK(photon.branch == mp::Branch::Photon);
  CHECK(photon.energy == doctest::Approx(2.0 * mp::pi * K.hbar * K.c / 1e-6).epsilon(1e-15));
  const auto s = state_with_mu(5.0);
  CHECK(mp::mode_energy(1e30, s).branch == mp::Branch::Massive);
}

TEST_CASE("nonrelativistic mode probability") {
  const mp::ThermalState electron{mp::codata2018::electron_mass, 300.0, 1.0};
  const double lambda_c = mp::correlation_length(electron.mass, electron.temperature);
  CHECK(mp::mode_probability_nonrel(1e10, electron) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(mp::mode_probability_nonrel(mp::pi * lambda_c, electron) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  const double w = mp::mode_probability_nonrel(2.0 * lambda_c, electron);
  CHECK(mp::mode_probability_nonrel(lambda_c, electron) == doctest::Approx(std::pow(w, 4)).epsilon(1e-13));
  CHECK_THROWS_AS(mp::mode_probability_nonrel(0.0, electron), mp::DomainError);
  CHECK_THROWS_AS(mp::mode_probability_nonrel(1.0, {0.0, 300.0, 1.0}), mp::DomainError);
}

TEST_CASE("relativistic mode probability") {
  const double mu = 4.0;
  const auto s = state_with_mu(mu);
  CHECK(mp::mode_probability_rel(lambda_at_reduced(1.0, mu, s), s) == doctest::Approx(std::exp(-1.0)).epsilon(1e-13));
  CHECK(mp::mode_probability_rel(1e30, s) == doctest::Approx(std::exp(-mu)).epsilon(1e-14));
  const mp::ThermalState electron{mp::codata2018::electron_mass, 300.0, 1.0};
  CHECK(mp::mode_probability_rel(1e10, electron) == 0.0);
  CHECK_THROWS_AS(mp::mode_probability_rel(1e-20, electron), mp::ImaginaryEnergy);
}

TEST_CASE("mean energy") {
  const double mu = 4.0;
  const auto s = state_with_mu(mu);
  const double kT = K.k_boltzmann * s.temperature;
  CHECK(mp::mean_energy(lambda_at_reduced(1.0, mu, s), s) / kT == doctest::Approx(0.5819767068693265).epsilon(1e-13));
  // Equipartition as E/kT -> 0 (near the Compton boundary).
  const auto light = state_with_mu(1e-3);
  CHECK(mp::mean_energy(lambda_at_reduced(1e-6, 1e-3, light), light) / kT == doctest::Approx(1.0).epsilon(1e-6));
  CHECK_THROWS_AS(mp::mean_energy(1e-30, s), mp::ImaginaryEnergy);
}

TEST_CASE("n-particle weights") {
  const double mu = 4.0;
  const auto s = state_with_mu(mu);
  const double lambda = lambda_at_reduced(1.0, mu, s);
  CHECK(mp::n_particle_weight(lambda, 0, s) == 1.0);
  const double one = mp::n_particle_weight(lambda, 1, s);
  CHECK(mp::n_particle_weight(lambda, 2, s) == doctest::Approx(one * one).epsilon(1e-14));
  CHECK(mp::n_particle_weight(lambda, 3, s) == doctest::Approx(0.049787068367863944).epsilon(1e-13));
}

TEST_CASE("mode density") {
  CHECK(mp::mode_density(1.0) == doctest::Approx(0.05066059182116889).epsilon(1e-15));
  CHECK(mp::mode_density(2.0) == doctest::Approx(4.0 * mp::mode_density(1.0)).epsilon(1e-15));
  CHECK_THROWS_AS(mp::mode_density(0.0), mp::DomainError);
}

TEST_CASE("massive spectral density") {
  const double mu = 10.0;
  const auto s = state_with_mu(mu);
  const double kT = K.k_boltzmann * s.temperature;
  const double k = 0.5 * s.mass * K.c / K.hbar;
  const auto p = mp::spectral_density_massive(k, s);
  // 10 sqrt(0.75) / (e^{10 sqrt(0.75)} - 1), high-precision reference.
  CHECK(p.mean_energy / kT == doctest::Approx(1.5014309997868177e-3).epsilon(1e-12));
  CHECK(p.mode_density == doctest::Approx(mp::mode_density(k)).epsilon(1e-15));
  CHECK(p.spectral_density == doctest::Approx(p.mode_density * p.mean_energy).epsilon(1e-15));
  // k -> 0: the k² prefactor takes ρ to zero.
  const double small = 1e-6 * k;
  CHECK(mp::spectral_density_massive(small, s).spectral_density /
            mp::spectral_density_massive(10.0 * small, s).spectral_density ==
        doctest::Approx(0.01).epsilon(1e-6));
  CHECK_THROWS_AS(mp::spectral_density_massive(2.0 * k, s), mp::ImaginaryEnergy);
}

TEST_CASE("photon branch") {
  const double t = 300.0;
  const double kT = K.k_boltzmann * t;
  const double w1 = kT / K.hbar;
  CHECK(mp::photon_mean_energy(w1, t) / kT == doctest::Approx(0.5819767068693265).epsilon(1e-13));
  CHECK(mp::photon_mean_energy(1e-8 * w1, t) / kT == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(mp::photon_mean_energy(10.0 * w1, t) / kT == doctest::Approx(4.540199100968777e-4).epsilon(1e-12));
  const double w = 1e-6 * w1;
  const double rj = w * w * kT / (mp::pi * mp::pi * K.c * K.c * K.c);
  CHECK(mp::planck_spectral_density(w, t) == doctest::Approx(rj).epsilon(1e-6));
  CHECK_THROWS_AS(mp::photon_mean_energy(0.0, t), mp::DomainError);
  CHECK_THROWS_AS(mp::planck_spectral_density(1.0, 0.0), mp::DomainError);
}

TEST_CASE("Wien peak") {
  CHECK(mp::wien_peak(300.0) == doctest::Approx(1.108151e14).epsilon(1e-6));
  const double x = K.hbar * mp::wien_peak(300.0) / (K.k_boltzmann * 300.0);
  CHECK(std::abs(x - 2.821439372122079) < 1e-7);
  // Restricted window: the endpoint nearest the peak.
  const double s = K.k_boltzmann * 300.0 / K.hbar;
  CHECK(mp::wien_peak_in(300.0, 4.0 * s, 9.0 * s) == doctest::Approx(4.0 * s).epsilon(1e-15));
  CHECK(mp::wien_peak_in(300.0, 0.5 * s, 1.0 * s) == doctest::Approx(1.0 * s).epsilon(1e-15));
}

TEST_CASE("reduced helpers stay finite in the far tail") {
  CHECK(mp::reduced::bose_factor(1e4) == 0.0);
  CHECK(mp::reduced::boltzmann_weight(701.0) == 0.0);
  CHECK(mp::reduced::boltzmann_weight(1.0) == doctest::Approx(std::exp(-1.0)));
  CHECK(mp::reduced::bose_factor(0.0) == 1.0);
  CHECK(std::isfinite(mp::reduced::planck_integrand(1e-300)));
}

TEST_CASE("spectrum identity across modules") {
  const mp::ThermalState electron{mp::codata2018::electron_mass, 300.0, 1.0};
  const double lambda_c = mp::correlation_length(electron.mass, electron.temperature);
  for (int i = 1; i <= 50; ++i) {
    const double k = 0.12 * i / lambda_c;
    CHECK(mp::gaussian_spectrum(k, lambda_c) ==
          doctest::Approx(mp::mode_probability_nonrel(2.0 * mp::pi / k, electron)).epsilon(1e-12));
  }
}
