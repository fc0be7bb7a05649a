#include "massplanck/units.hpp"

#include <string>

#include "massplanck/constants.hpp"
#include "massplanck/errors.hpp"

namespace massplanck {

UnitMode parse_unit_mode(std::string_view text) {
  if (text == "si" || text == "SI") return UnitMode::SI;
  if (text == "natural" || text == "Natural") return UnitMode::Natural;
  throw DomainError("unknown unit mode '" + std::string(text) + "' (expected si|natural)");
}

std::string_view to_string(UnitMode mode) {
  return mode == UnitMode::SI ? "SI" : "Natural";
}

double UnitSystem::scale(Dimension dim) const {
  if (mode_ == UnitMode::SI) return 1.0;
  const auto& k = constants();
  const double mass = k.planck_mass;
  const double length = k.planck_length();
  const double time = k.planck_time();
  const double energy = k.planck_energy();
  switch (dim) {
    case Dimension::Dimensionless: return 1.0;
    case Dimension::Mass: return mass;
    case Dimension::Length: return length;
    case Dimension::Time: return time;
    case Dimension::Energy: return energy;
    case Dimension::Temperature: return k.planck_temperature();
    case Dimension::Wavenumber: return 1.0 / length;
    case Dimension::AngularFrequency: return 1.0 / time;
    case Dimension::Action: return k.hbar;
    case Dimension::EnergyDensityPerWavenumber: return energy / (length * length);
    case Dimension::EnergyDensityPerFrequency: return energy * time / (length * length * length);
    case Dimension::ModeDensity: return 1.0 / (length * length);
    case Dimension::EnergyDensity: return energy / (length * length * length);
  }
  return 1.0;
}

}  // namespace massplanck
