#include "massplanck/blackhole.hpp"

#include <cmath>
#include <string>

#include "massplanck/constants.hpp"
#include "massplanck/errors.hpp"

namespace massplanck {

namespace {

void require_mass(double mass, const char* op) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw DomainError(std::string(op) + ": mass must be positive and finite, got " +
                      std::to_string(mass));
  }
}

double rest_energy_planck() { return constants().planck_energy(); }

// Binding energy in units of m_p c² as a function of μ = m/m_p.
double reduced_binding(double mu) {
  const double q = 0.5 / mu;
  return -0.5 * mu + 1.5 * q * q * q;
}

}  // namespace

double gravitational_radius(double mass) {
  require_mass(mass, "gravitational_radius");
  const auto& k = constants();
  return 2.0 * k.g_newton * mass / (k.c * k.c);
}

double gravitational_radius_planck_form(double mass) {
  require_mass(mass, "gravitational_radius");
  const auto& k = constants();
  return 2.0 * k.hbar * mass / (k.planck_mass * k.planck_mass * k.c);
}

double bh_vqu_printed(double mass) {
  require_mass(mass, "bh_vqu_printed");
  const double q = constants().planck_mass / (2.0 * mass);
  return 1.5 * q * q * q * rest_energy_planck();
}

double bh_vqu_geometric(double mass) {
  require_mass(mass, "bh_vqu_geometric");
  const auto& k = constants();
  const double wavenumber = pi / (2.0 * gravitational_radius(mass));
  return 3.0 * (k.hbar * k.hbar / mass) * wavenumber * wavenumber;
}

double gravitational_energy(double mass) {
  require_mass(mass, "gravitational_energy");
  const auto& k = constants();
  return -0.5 * mass * k.c * k.c;
}

double binding_energy(double mass) {
  return gravitational_energy(mass) + bh_vqu_printed(mass);
}

StabilityThreshold stability_threshold() {
  // reduced_binding is strictly decreasing: positive at 0.1, negative at 10.
  double lo = 0.1;
  double hi = 10.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (reduced_binding(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // lo is the largest mass found with E_b > 0. Keep the SI value on the
  // unstable side as well, so is_stable(threshold) is false after rounding.
  double kg = lo * constants().planck_mass;
  while (is_stable(kg)) kg = std::nextafter(kg, 0.0);
  return {lo, kg};
}

bool is_stable(double mass) { return binding_energy(mass) < 0.0; }

BlackHoleReport black_hole_report(double mass) {
  require_mass(mass, "black_hole_report");
  BlackHoleReport r;
  r.mass_kg = mass;
  r.mass_planck = mass / constants().planck_mass;
  r.gravitational_radius = gravitational_radius(mass);
  r.vqu_printed = bh_vqu_printed(mass);
  r.vqu_geometric = bh_vqu_geometric(mass);
  r.e_grav = gravitational_energy(mass);
  r.e_binding = r.e_grav + r.vqu_printed;
  r.stable = r.e_binding < 0.0;
  return r;
}

}  // namespace massplanck
