#pragma once

// Quantum pseudo-potential of a particle-density field n = |Ψ|².
//
// Grids are row-major over (x, y, z) with z contiguous. A 1-D grid occupies
// the contiguous axis only, i.e. its extent is {1, 1, n}.
//
// Sign conventions follow the defining formulas literally:
//   nonrelativistic   V = -(ħ²/2m) ∇²√n / √n
//   d'Alembertian     V = -(ħ²/m) ((1/c²)∂²_t - ∇²) √n / √n
// A static cos² mode therefore gives +(ħ²/2m)k² from the first and
// -(ħ²/m)k² from the second.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace massplanck {

using Extent = std::array<std::size_t, 3>;

struct GridDensity {
  std::vector<double> values;  // n(q) >= 0, row-major
  double spacing = 0.0;        // uniform step h on every axis
  int dims = 1;                // 1 or 3
  Extent extent{1, 1, 0};
  bool periodic = false;

  static GridDensity line(std::vector<double> values, double spacing, bool periodic);
  static GridDensity cube(std::vector<double> values, Extent extent, double spacing, bool periodic);

  std::size_t size() const { return extent[0] * extent[1] * extent[2]; }
  std::size_t flat_index(std::size_t ix, std::size_t iy, std::size_t iz) const {
    return (ix * extent[1] + iy) * extent[2] + iz;
  }

  // Throws DomainError: negative/non-finite samples, < 8 samples per axis,
  // bad spacing, or a size/extent mismatch.
  void validate() const;
};

// Values of V_qu on the evaluated region of a grid. Periodic grids are
// evaluated everywhere; otherwise only interior points (offset 1 per axis).
struct PotentialField {
  Extent extent{1, 1, 0};
  Extent offset{0, 0, 0};  // index of values[0] in the source grid
  double spacing = 0.0;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double at(std::size_t ix, std::size_t iy, std::size_t iz) const {
    return values[(ix * extent[1] + iy) * extent[2] + iz];
  }
};

// Relative density below which an evaluation point counts as a node.
inline constexpr double kNodeThreshold = 1e-12;

// -(ħ²/2m) ∇²√n/√n by second-order central differences on √n.
// Throws DomainError (m <= 0) or SingularDensity (node at an evaluation point).
PotentialField vqu_grid_nonrel(const GridDensity& density, double mass);

// (ħ²/2m)(2π/λ)², the exact value for a cos² density mode.
double vqu_sinusoid(double wavelength, double mass);

struct TravelingMode {
  double wavelength = 0.0;      // m, > 0
  double velocity_ratio = 0.0;  // v/c in [0, 1]
  double mass = 0.0;            // kg, >= 0; 0 requires v = c

  void validate() const;
};

// -(ħ²/m)(2π/λ)²(1 - v²/c²); exactly 0 for the photon (m = 0, v = c).
double vqu_traveling(const TravelingMode& mode);

struct SpacetimePotential {
  std::size_t first_slice = 1;
  std::vector<PotentialField> slices;  // slices first_slice .. first_slice + size - 1
};

// d'Alembertian form on a sequence of equally spaced time slices sharing one
// spatial layout. Interior slices only (needs >= 3).
SpacetimePotential vqu_grid_dalembert(std::span<const GridDensity> frames, double mass, double dt);

// ∫ n V_qu dq with n normalised to unit integral, written in the
// division-free form -(ħ²/2m) ∫ √n ∇²√n dq; trapezoid rule over the
// evaluated region. Density nodes contribute zero instead of raising.
double mean_qp_energy(const GridDensity& density, double mass);

}  // namespace massplanck
