#include "massplanck/mode_statistics.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "massplanck/constants.hpp"
#include "massplanck/errors.hpp"

namespace massplanck {

namespace {

constexpr double kUnderflowExponent = 700.0;

void require_positive(double v, const char* what, const char* op) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    std::ostringstream msg;
    msg << op << ": " << what << " must be positive and finite, got " << v;
    throw DomainError(msg.str());
  }
}

double thermal_energy(double temperature) { return constants().k_boltzmann * temperature; }

// (ħ/mc)(2π/λ), checked against the Compton boundary.
double compton_ratio(double lambda, const ThermalState& state, const char* op) {
  state.validate();
  if (state.mass == 0.0) {
    throw WrongBranch(std::string(op) +
                      ": massless state; use photon_mean_energy / planck_spectral_density");
  }
  require_positive(lambda, "lambda", op);
  const auto& k = constants();
  const double ratio = (k.hbar / (state.mass * k.c)) * (2.0 * pi / lambda);
  const double critical = 2.0 * pi * k.hbar / (state.mass * k.c);
  // Both tests: the ratio can round below 1 at λ = critical exactly.
  if (!(ratio < 1.0) || !(lambda > critical)) {
    std::ostringstream msg;
    msg << op << ": lambda = " << lambda << " m is at or below the critical wavelength "
        << critical << " m (2πħ/mc); mode energy is imaginary";
    throw ImaginaryEnergy(msg.str(), critical);
  }
  return ratio;
}

double reduced_energy_from_ratio(double ratio, const ThermalState& state) {
  const auto& k = constants();
  const double mu = state.mass * k.c * k.c / thermal_energy(state.temperature);
  return mu * state.gamma * std::sqrt((1.0 - ratio) * (1.0 + ratio));
}

}  // namespace

namespace reduced {

double bose_factor(double x) {
  if (x == 0.0) return 1.0;
  if (x > kUnderflowExponent) return 0.0;
  return x / std::expm1(x);
}

double planck_integrand(double x) {
  if (x == 0.0) return 0.0;
  if (x > kUnderflowExponent) return 0.0;
  return x * x * x / std::expm1(x);
}

double boltzmann_weight(double x) { return x > kUnderflowExponent ? 0.0 : std::exp(-x); }

}  // namespace reduced

double mode_energy_massive(double lambda, const ThermalState& state) {
  const double ratio = compton_ratio(lambda, state, "mode_energy_massive");
  const auto& k = constants();
  return state.mass * state.gamma * k.c * k.c * std::sqrt((1.0 - ratio) * (1.0 + ratio));
}

ModeEnergy mode_energy(double lambda, const ThermalState& state) {
  state.validate();
  if (state.is_photon()) {
    require_positive(lambda, "lambda", "mode_energy");
    const auto& k = constants();
    return {lambda, 2.0 * pi * k.hbar * k.c / lambda, Branch::Photon};
  }
  return {lambda, mode_energy_massive(lambda, state), Branch::Massive};
}

double reduced_mode_energy(double lambda, const ThermalState& state) {
  return reduced_energy_from_ratio(compton_ratio(lambda, state, "reduced_mode_energy"), state);
}

double mode_probability_nonrel(double lambda, const ThermalState& state) {
  require_positive(lambda, "lambda", "mode_probability_nonrel");
  require_positive(state.mass, "mass", "mode_probability_nonrel");
  require_positive(state.temperature, "temperature", "mode_probability_nonrel");
  const auto& k = constants();
  const double wavenumber = 2.0 * pi / lambda;
  const double exponent =
      k.hbar * k.hbar / (2.0 * state.mass * thermal_energy(state.temperature)) * wavenumber * wavenumber;
  return reduced::boltzmann_weight(exponent);
}

double mode_probability_rel(double lambda, const ThermalState& state) {
  return reduced::boltzmann_weight(reduced_mode_energy(lambda, state));
}

double mean_energy(double lambda, const ThermalState& state) {
  const double x = reduced_mode_energy(lambda, state);
  return thermal_energy(state.temperature) * reduced::bose_factor(x);
}

double n_particle_weight(double lambda, unsigned long long n, const ThermalState& state) {
  const double x = reduced_mode_energy(lambda, state);
  if (n == 0) return 1.0;
  return reduced::boltzmann_weight(static_cast<double>(n) * x);
}

double mode_density(double k) {
  require_positive(k, "k", "mode_density");
  return k * k / (2.0 * pi * pi);
}

SpectralPoint spectral_density_massive(double k, const ThermalState& state) {
  require_positive(k, "k", "spectral_density_massive");
  SpectralPoint p;
  p.k = k;
  p.mode_density = mode_density(k);
  p.mean_energy = mean_energy(2.0 * pi / k, state);
  p.spectral_density = p.mode_density * p.mean_energy;
  return p;
}

double photon_mean_energy(double omega, double temperature) {
  require_positive(omega, "omega", "photon_mean_energy");
  require_positive(temperature, "temperature", "photon_mean_energy");
  const double kT = thermal_energy(temperature);
  return kT * reduced::bose_factor(constants().hbar * omega / kT);
}

double planck_spectral_density(double omega, double temperature) {
  require_positive(omega, "omega", "planck_spectral_density");
  require_positive(temperature, "temperature", "planck_spectral_density");
  const auto& k = constants();
  const double c3 = k.c * k.c * k.c;
  return omega * omega / (pi * pi * c3) * photon_mean_energy(omega, temperature);
}

namespace {

// Golden-section maximisation of the reduced Planck integrand on [lo, hi].
double golden_max_reduced(double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = reduced::planck_integrand(c);
  double fd = reduced::planck_integrand(d);
  for (int iter = 0; iter < 200 && (b - a) > 1e-9 * 0.5 * (a + b); ++iter) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = reduced::planck_integrand(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = reduced::planck_integrand(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double wien_peak(double temperature) {
  require_positive(temperature, "temperature", "wien_peak");
  const double kT = thermal_energy(temperature);
  return golden_max_reduced(1.0, 5.0) * kT / constants().hbar;
}

double wien_peak_in(double temperature, double omega_lo, double omega_hi) {
  require_positive(temperature, "temperature", "wien_peak_in");
  require_positive(omega_lo, "omega_lo", "wien_peak_in");
  if (!(omega_hi > omega_lo)) throw DomainError("wien_peak_in: omega_hi must exceed omega_lo");
  const double kT = thermal_energy(temperature);
  const double scale = kT / constants().hbar;
  const double x_lo = omega_lo / scale;
  const double x_hi = omega_hi / scale;
  // The reduced integrand is unimodal, so the constrained peak is either the
  // free peak or the nearer endpoint.
  const double free_peak = golden_max_reduced(1.0, 5.0);
  if (free_peak < x_lo) return omega_lo;
  if (free_peak > x_hi) return omega_hi;
  return free_peak * scale;
}

}  // namespace massplanck
