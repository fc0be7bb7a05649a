#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace massplanck {

// Invalid argument outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// (ħ/mc)(2π/λ) >= 1: the massive mode energy has no real value.
class ImaginaryEnergy : public DomainError {
 public:
  ImaginaryEnergy(const std::string& what, double critical_wavelength)
      : DomainError(what), critical_wavelength_(critical_wavelength) {}

  // 2πħ/(mc), the shortest wavelength the massive branch accepts (exclusive).
  double critical_wavelength() const noexcept { return critical_wavelength_; }

 private:
  double critical_wavelength_;
};

// Massive-branch formula called with m = 0; use the photon operations.
class WrongBranch : public DomainError {
 public:
  using DomainError::DomainError;
};

// Density below the node threshold at a point where V_qu is evaluated.
class SingularDensity : public DomainError {
 public:
  SingularDensity(const std::string& what, std::size_t flat_index)
      : DomainError(what), flat_index_(flat_index) {}

  std::size_t flat_index() const noexcept { return flat_index_; }

 private:
  std::size_t flat_index_;
};

// Spectrum does not decay below the tail threshold at k_max.
class InsufficientTail : public DomainError {
 public:
  using DomainError::DomainError;
};

// Sampler configuration violates an invariant; the message names it.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed input file (CSV density, JSON config).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace massplanck
