#pragma once

// Black-hole energetics with the confined-mode quantum potential.
//
// Two quantum-potential values are kept side by side: the closed form used
// for the binding energy and the stability threshold, and a recomputation
// from the mode ansatz with kλ = π/(2R_g). They differ by exactly π².

namespace massplanck {

struct BlackHoleReport {
  double mass_kg = 0.0;
  double mass_planck = 0.0;           // m / m_p
  double gravitational_radius = 0.0;  // m
  double vqu_printed = 0.0;           // J
  double vqu_geometric = 0.0;         // J
  double e_grav = 0.0;                // J
  double e_binding = 0.0;             // J, e_grav + vqu_printed
  bool stable = false;                // e_binding < 0
};

struct StabilityThreshold {
  double planck_units = 0.0;
  double kg = 0.0;
};

// 2Gm/c². Throws DomainError for m <= 0.
double gravitational_radius(double mass);
// The same radius written as 2ħm/(m_p² c).
double gravitational_radius_planck_form(double mass);

// (3/2)(m_p/2m)³ m_p c²
double bh_vqu_printed(double mass);
// 3(ħ²/m)(π/(2R_g))², equal to (3π²/16)(m_p/m)³ m_p c²
double bh_vqu_geometric(double mass);
// -(1/2) m c²
double gravitational_energy(double mass);
// gravitational_energy + bh_vqu_printed
double binding_energy(double mass);

// Root of the binding energy by bisection on [0.1, 10] m_p.
StabilityThreshold stability_threshold();

// binding_energy(m) < 0 (the root itself is unstable).
bool is_stable(double mass);

BlackHoleReport black_hole_report(double mass);

}  // namespace massplanck
