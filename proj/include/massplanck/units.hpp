#pragma once

#include <string_view>

namespace massplanck {

// Quantities the CLI converts at its boundary. Natural mode is the Planck
// system: ħ = c = k_B = 1 with masses in units of m_p (so G = 1 as well).
enum class Dimension {
  Dimensionless,
  Mass,
  Length,
  Time,
  Energy,
  Temperature,
  Wavenumber,
  AngularFrequency,
  Action,
  EnergyDensityPerWavenumber,  // J / m^3 / (1/m)
  EnergyDensityPerFrequency,   // J s / m^3
  ModeDensity,                 // 1 / m^3 / (1/m)
  EnergyDensity,               // J / m^3
};

enum class UnitMode { SI, Natural };

UnitMode parse_unit_mode(std::string_view text);
std::string_view to_string(UnitMode mode);

class UnitSystem {
 public:
  explicit UnitSystem(UnitMode mode = UnitMode::SI) : mode_(mode) {}

  UnitMode mode() const { return mode_; }

  // Size of one unit of `dim` in SI (1 in SI mode).
  double scale(Dimension dim) const;

  double to_si(double value, Dimension dim) const { return value * scale(dim); }
  double from_si(double value, Dimension dim) const { return value / scale(dim); }

 private:
  UnitMode mode_;
};

}  // namespace massplanck
