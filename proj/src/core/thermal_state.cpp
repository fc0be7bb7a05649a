#include "massplanck/thermal_state.hpp"

#include <cmath>
#include <string>

#include "massplanck/constants.hpp"
#include "massplanck/errors.hpp"

namespace massplanck {

void ThermalState::validate() const {
  if (!(mass >= 0.0) || !std::isfinite(mass)) {
    throw DomainError("mass must be finite and >= 0, got " + std::to_string(mass));
  }
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw DomainError("temperature must be finite and > 0, got " + std::to_string(temperature));
  }
  if (!(gamma >= 1.0) || !std::isfinite(gamma)) {
    throw DomainError("gamma must be finite and >= 1, got " + std::to_string(gamma));
  }
}

DimensionlessGroups dimensionless_groups(const ThermalState& state, double omega) {
  state.validate();
  if (!(omega >= 0.0)) {
    throw DomainError("omega must be >= 0, got " + std::to_string(omega));
  }
  const auto& k = constants();
  const double kT = k.k_boltzmann * state.temperature;
  return {k.hbar * omega / kT, state.mass * k.c * k.c / kT};
}

}  // namespace massplanck
