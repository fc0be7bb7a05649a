#pragma once

// Thermal statistics of density-fluctuation modes: the generalised Planck
// law for a scalar field of rest mass m, and the photon branch.
//
// Every exponent is formed from the dimensionless groups x = E/k_BT and
// mu = mc²/k_BT before exponentiation, so masses up to ~1e8 k_BT work.

#include "massplanck/thermal_state.hpp"

namespace massplanck {

enum class Branch { Massive, Photon };

struct ModeEnergy {
  double lambda = 0.0;
  double energy = 0.0;
  Branch branch = Branch::Massive;
};

struct SpectralPoint {
  double k = 0.0;
  double mode_density = 0.0;      // k²/(2π²)
  double mean_energy = 0.0;       // J
  double spectral_density = 0.0;  // J m⁻³ per unit k (massive) or per unit ω (photon)
};

// m γ c² sqrt(1 - (ħ/mc)²(2π/λ)²).
// Throws WrongBranch for m = 0, ImaginaryEnergy for (ħ/mc)(2π/λ) >= 1.
double mode_energy_massive(double lambda, const ThermalState& state);

// Branch dispatch: the massive formula for m > 0, ħω = 2πħc/λ for m = 0.
ModeEnergy mode_energy(double lambda, const ThermalState& state);

// E(λ)/k_BT of the massive mode; the quantity every weight below exponentiates.
double reduced_mode_energy(double lambda, const ThermalState& state);

// exp[-(ħ²/(2 m k_B T))(2π/λ)²], the Gaussian-in-k Boltzmann weight.
double mode_probability_nonrel(double lambda, const ThermalState& state);

// exp[-E(λ)/k_BT]; returns exactly 0 once the exponent passes -700.
double mode_probability_rel(double lambda, const ThermalState& state);

// E/(exp(E/k_BT) - 1) for the massive mode.
double mean_energy(double lambda, const ThermalState& state);

// exp[-n E(λ)/k_BT]
double n_particle_weight(double lambda, unsigned long long n, const ThermalState& state);

// k²/(2π²), modes per volume per unit wavenumber (one polarisation).
double mode_density(double k);

// n(k) <E>(2π/k), scalar field, one polarisation.
SpectralPoint spectral_density_massive(double k, const ThermalState& state);

// ħω/(exp(ħω/k_BT) - 1)
double photon_mean_energy(double omega, double temperature);

// (ω²/(π²c³)) ħω/(exp(ħω/k_BT) - 1), two polarisations.
double planck_spectral_density(double omega, double temperature);

// ω maximising planck_spectral_density at temperature T (golden-section in
// the reduced variable x = ħω/k_BT, bracket closed to 1e-9 relative).
double wien_peak(double temperature);

// Maximiser restricted to [omega_lo, omega_hi]; returns an endpoint when the
// unconstrained peak lies outside.
double wien_peak_in(double temperature, double omega_lo, double omega_hi);

// Stable helpers shared with the CLI and tests.
namespace reduced {
// x/(e^x - 1): 1 at x = 0, exact 0 beyond the underflow cut.
double bose_factor(double x);
// x³/(e^x - 1), the reduced Planck integrand.
double planck_integrand(double x);
// exp(-x) with exp(-x) := 0 for x > 700.
double boltzmann_weight(double x);
}  // namespace reduced

}  // namespace massplanck
