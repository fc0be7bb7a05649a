#pragma once

namespace massplanck {

// CODATA 2018 recommended values (SI). Source for all numeric tests.
namespace codata2018 {
inline constexpr double hbar = 1.054571817e-34;       // J s (exact: h exact / 2π)
inline constexpr double speed_of_light = 299792458.0;  // m/s (exact)
inline constexpr double boltzmann = 1.380649e-23;     // J/K (exact)
inline constexpr double newton_g = 6.67430e-11;       // m^3/(kg s^2), rel. unc. 2.2e-5
inline constexpr double electron_mass = 9.1093837015e-31;  // kg
// Tabulated Planck mass, used only to cross-check the derived value.
inline constexpr double planck_mass_reference = 2.176434e-8;  // kg
}  // namespace codata2018

inline constexpr double pi = 3.14159265358979323846;

struct PhysicalConstants {
  double hbar;
  double c;
  double k_boltzmann;
  double g_newton;
  double planck_mass;  // sqrt(hbar c / G), derived

  double planck_length() const;       // ħ/(m_p c)
  double planck_time() const;         // ħ/(m_p c²)
  double planck_energy() const;       // m_p c²
  double planck_temperature() const;  // m_p c² / k_B
};

// CODATA 2018 constants with planck_mass computed from (ħ, c, G).
const PhysicalConstants& constants();

// mc/ħ. Throws DomainError for m <= 0.
double compton_wavenumber(double mass);

}  // namespace massplanck
