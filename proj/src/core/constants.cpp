#include "massplanck/constants.hpp"

#include <cassert>
#include <cmath>
#include <string>

#include "massplanck/errors.hpp"

namespace massplanck {

namespace {

PhysicalConstants make_constants() {
  PhysicalConstants k{};
  k.hbar = codata2018::hbar;
  k.c = codata2018::speed_of_light;
  k.k_boltzmann = codata2018::boltzmann;
  k.g_newton = codata2018::newton_g;
  k.planck_mass = std::sqrt(k.hbar * k.c / k.g_newton);
  assert(std::abs(k.planck_mass / codata2018::planck_mass_reference - 1.0) < 1e-4);
  return k;
}

}  // namespace

double PhysicalConstants::planck_length() const { return hbar / (planck_mass * c); }
double PhysicalConstants::planck_time() const { return hbar / (planck_mass * c * c); }
double PhysicalConstants::planck_energy() const { return planck_mass * c * c; }
double PhysicalConstants::planck_temperature() const {
  return planck_mass * c * c / k_boltzmann;
}

const PhysicalConstants& constants() {
  static const PhysicalConstants k = make_constants();
  return k;
}

double compton_wavenumber(double mass) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw DomainError("compton_wavenumber: mass must be positive and finite, got " +
                      std::to_string(mass));
  }
  const auto& k = constants();
  return mass * k.c / k.hbar;
}

}  // namespace massplanck
