#pragma once

namespace massplanck {

// Parameters of every spectral formula. mass = 0 selects the photon branch.
struct ThermalState {
  double mass = 0.0;         // kg, >= 0
  double temperature = 0.0;  // K, > 0
  double gamma = 1.0;        // Lorentz factor of the mode, >= 1

  // Throws DomainError naming the offending field.
  void validate() const;

  bool is_photon() const { return mass == 0.0; }
};

struct DimensionlessGroups {
  double x;   // ħω / k_B T
  double mu;  // m c² / k_B T
};

DimensionlessGroups dimensionless_groups(const ThermalState& state, double omega);

}  // namespace massplanck
