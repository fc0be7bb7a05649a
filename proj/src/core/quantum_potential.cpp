#include "massplanck/quantum_potential.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "massplanck/constants.hpp"
#include "massplanck/errors.hpp"
#include "massplanck/kernels.hpp"

namespace massplanck {

namespace {

constexpr std::size_t kMinSamplesPerAxis = 8;

std::array<bool, 3> active_axes(int dims) {
  return dims == 1 ? std::array<bool, 3>{false, false, true} : std::array<bool, 3>{true, true, true};
}

void require_mass(double mass, const char* op) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw DomainError(std::string(op) + ": mass must be positive, got " + std::to_string(mass));
  }
}

// √n laid out for stencil evaluation. Periodic grids gain one ghost layer per
// active axis; `lo`/`hi` bound the evaluation region in array coordinates.
struct RootArray {
  Extent extent{1, 1, 1};
  Extent lo{0, 0, 0};
  Extent hi{1, 1, 1};
  Extent pad{0, 0, 0};
  std::vector<double> values;

  std::size_t frame_size() const { return extent[0] * extent[1] * extent[2]; }
  std::size_t region_size() const {
    return (hi[0] - lo[0]) * (hi[1] - lo[1]) * (hi[2] - lo[2]);
  }
};

RootArray layout_for(const GridDensity& g) {
  RootArray a;
  const auto act = active_axes(g.dims);
  for (int ax = 0; ax < 3; ++ax) {
    const std::size_t n = g.extent[ax];
    if (!act[ax]) {
      a.extent[ax] = 1;
      a.lo[ax] = 0;
      a.hi[ax] = 1;
    } else if (g.periodic) {
      a.pad[ax] = 1;
      a.extent[ax] = n + 2;
      a.lo[ax] = 1;
      a.hi[ax] = n + 1;
    } else {
      a.extent[ax] = n;
      a.lo[ax] = 1;
      a.hi[ax] = n - 1;
    }
  }
  return a;
}

// Appends one frame of √n (with periodic ghosts) to `a.values`.
void append_roots(const GridDensity& g, RootArray& a) {
  const std::size_t base = a.values.size();
  a.values.resize(base + a.frame_size());
  for (std::size_t i0 = 0; i0 < a.extent[0]; ++i0) {
    const std::size_t s0 = (i0 + g.extent[0] - a.pad[0]) % g.extent[0];
    for (std::size_t i1 = 0; i1 < a.extent[1]; ++i1) {
      const std::size_t s1 = (i1 + g.extent[1] - a.pad[1]) % g.extent[1];
      double* dst = a.values.data() + base + (i0 * a.extent[1] + i1) * a.extent[2];
      const double* src = g.values.data() + (s0 * g.extent[1] + s1) * g.extent[2];
      for (std::size_t i2 = 0; i2 < a.extent[2]; ++i2) {
        const std::size_t s2 = (i2 + g.extent[2] - a.pad[2]) % g.extent[2];
        dst[i2] = std::sqrt(src[s2]);
      }
    }
  }
}

void check_nodes(const GridDensity& g, const RootArray& a) {
  const double peak = *std::max_element(g.values.begin(), g.values.end());
  const double threshold = kNodeThreshold * peak;
  for (std::size_t i0 = a.lo[0]; i0 < a.hi[0]; ++i0) {
    for (std::size_t i1 = a.lo[1]; i1 < a.hi[1]; ++i1) {
      for (std::size_t i2 = a.lo[2]; i2 < a.hi[2]; ++i2) {
        const std::size_t ix = i0 - a.pad[0];
        const std::size_t iy = i1 - a.pad[1];
        const std::size_t iz = i2 - a.pad[2];
        const std::size_t flat = g.flat_index(ix, iy, iz);
        if (!(g.values[flat] >= threshold) || g.values[flat] <= 0.0) {
          std::ostringstream msg;
          msg << "SingularDensity: density " << g.values[flat] << " below node threshold at point "
              << flat;
          if (g.dims == 3) msg << " (ix=" << ix << ", iy=" << iy << ", iz=" << iz << ")";
          throw SingularDensity(msg.str(), flat);
        }
      }
    }
  }
}

// out[region] += scale * Σ_axes D²(roots) for the frame starting at `frame`.
void add_laplacian(const RootArray& a, const double* frame, const std::array<bool, 3>& act,
                   double scale, double* out) {
  const auto& k = kernels::active();
  const std::ptrdiff_t strides[3] = {static_cast<std::ptrdiff_t>(a.extent[1] * a.extent[2]),
                                     static_cast<std::ptrdiff_t>(a.extent[2]), 1};
  const std::size_t len = a.hi[2] - a.lo[2];
  for (std::size_t i0 = a.lo[0]; i0 < a.hi[0]; ++i0) {
    for (std::size_t i1 = a.lo[1]; i1 < a.hi[1]; ++i1) {
      const double* centre = frame + (i0 * a.extent[1] + i1) * a.extent[2] + a.lo[2];
      for (int ax = 0; ax < 3; ++ax) {
        if (act[ax]) k.second_difference_add(centre, strides[ax], scale, out, len);
      }
      out += len;
    }
  }
}

// out[region] = factor * out / roots, line by line.
void divide_by_roots(const RootArray& a, const double* frame, double factor, double* out) {
  const auto& k = kernels::active();
  const std::size_t len = a.hi[2] - a.lo[2];
  for (std::size_t i0 = a.lo[0]; i0 < a.hi[0]; ++i0) {
    for (std::size_t i1 = a.lo[1]; i1 < a.hi[1]; ++i1) {
      k.scale_divide(out, frame + (i0 * a.extent[1] + i1) * a.extent[2] + a.lo[2], factor, len);
      out += len;
    }
  }
}

PotentialField empty_field(const RootArray& a, double spacing) {
  PotentialField f;
  for (int ax = 0; ax < 3; ++ax) {
    f.extent[ax] = a.hi[ax] - a.lo[ax];
    f.offset[ax] = a.lo[ax] - a.pad[ax];
  }
  f.spacing = spacing;
  f.values.assign(a.region_size(), 0.0);
  return f;
}

// Trapezoid weights along one axis of the evaluated region.
double end_weight(bool periodic, std::size_t i, std::size_t count) {
  if (periodic || count < 2) return 1.0;
  return (i == 0 || i + 1 == count) ? 0.5 : 1.0;
}

}  // namespace

GridDensity GridDensity::line(std::vector<double> values, double spacing, bool periodic) {
  GridDensity g;
  g.extent = {1, 1, values.size()};
  g.values = std::move(values);
  g.spacing = spacing;
  g.dims = 1;
  g.periodic = periodic;
  g.validate();
  return g;
}

GridDensity GridDensity::cube(std::vector<double> values, Extent extent, double spacing,
                              bool periodic) {
  GridDensity g;
  g.values = std::move(values);
  g.extent = extent;
  g.spacing = spacing;
  g.dims = 3;
  g.periodic = periodic;
  g.validate();
  return g;
}

void GridDensity::validate() const {
  if (dims != 1 && dims != 3) throw DomainError("GridDensity: dims must be 1 or 3");
  if (!(spacing > 0.0) || !std::isfinite(spacing)) {
    throw DomainError("GridDensity: spacing must be positive and finite");
  }
  const auto act = active_axes(dims);
  for (int ax = 0; ax < 3; ++ax) {
    if (act[ax] && extent[ax] < kMinSamplesPerAxis) {
      throw DomainError("GridDensity: at least 8 samples per axis required, axis " +
                        std::to_string(ax) + " has " + std::to_string(extent[ax]));
    }
    if (!act[ax] && extent[ax] != 1) throw DomainError("GridDensity: 1-D grid must use the last axis");
  }
  if (values.size() != size()) throw DomainError("GridDensity: value count does not match extent");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] >= 0.0) || !std::isfinite(values[i])) {
      throw DomainError("GridDensity: sample " + std::to_string(i) + " is negative or non-finite");
    }
  }
}

PotentialField vqu_grid_nonrel(const GridDensity& density, double mass) {
  require_mass(mass, "vqu_grid_nonrel");
  density.validate();
  RootArray roots = layout_for(density);
  append_roots(density, roots);
  check_nodes(density, roots);

  const auto& k = constants();
  const double h2 = density.spacing * density.spacing;
  PotentialField field = empty_field(roots, density.spacing);
  add_laplacian(roots, roots.values.data(), active_axes(density.dims), 1.0 / h2,
                field.values.data());
  divide_by_roots(roots, roots.values.data(), -k.hbar * k.hbar / (2.0 * mass), field.values.data());
  return field;
}

double vqu_sinusoid(double wavelength, double mass) {
  if (!(wavelength > 0.0)) throw DomainError("vqu_sinusoid: wavelength must be positive");
  require_mass(mass, "vqu_sinusoid");
  const auto& k = constants();
  const double wavenumber = 2.0 * pi / wavelength;
  return k.hbar * k.hbar / (2.0 * mass) * wavenumber * wavenumber;
}

void TravelingMode::validate() const {
  if (!(wavelength > 0.0) || !std::isfinite(wavelength)) {
    throw DomainError("TravelingMode: wavelength must be positive and finite");
  }
  if (!(velocity_ratio >= 0.0 && velocity_ratio <= 1.0)) {
    throw DomainError("TravelingMode: velocity_ratio must lie in [0, 1]");
  }
  if (!(mass >= 0.0) || !std::isfinite(mass)) throw DomainError("TravelingMode: mass must be >= 0");
  if (mass == 0.0 && velocity_ratio != 1.0) {
    throw DomainError("TravelingMode: a massless mode must travel at v = c");
  }
}

double vqu_traveling(const TravelingMode& mode) {
  mode.validate();
  if (mode.mass == 0.0) return 0.0;
  const auto& k = constants();
  const double wavenumber = 2.0 * pi / mode.wavelength;
  const double beta = mode.velocity_ratio;
  return -(k.hbar * k.hbar / mode.mass) * wavenumber * wavenumber * (1.0 - beta) * (1.0 + beta);
}

SpacetimePotential vqu_grid_dalembert(std::span<const GridDensity> frames, double mass, double dt) {
  require_mass(mass, "vqu_grid_dalembert");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("vqu_grid_dalembert: dt must be positive");
  if (frames.size() < 3) throw DomainError("vqu_grid_dalembert: at least 3 time slices required");
  const GridDensity& first = frames.front();
  for (const auto& f : frames) {
    f.validate();
    if (f.extent != first.extent || f.dims != first.dims || f.periodic != first.periodic ||
        f.spacing != first.spacing) {
      throw DomainError("vqu_grid_dalembert: all time slices must share one spatial layout");
    }
  }

  RootArray roots = layout_for(first);
  roots.values.reserve(roots.frame_size() * frames.size());
  for (const auto& f : frames) append_roots(f, roots);

  const auto& k = constants();
  const double h2 = first.spacing * first.spacing;
  const double time_scale = 1.0 / (k.c * k.c * dt * dt);
  const auto act = active_axes(first.dims);
  const auto& kt = kernels::active();
  const std::ptrdiff_t frame_stride = static_cast<std::ptrdiff_t>(roots.frame_size());
  const std::size_t len = roots.hi[2] - roots.lo[2];

  SpacetimePotential result;
  result.first_slice = 1;
  for (std::size_t t = 1; t + 1 < frames.size(); ++t) {
    check_nodes(frames[t], roots);
    const double* frame = roots.values.data() + t * roots.frame_size();
    PotentialField field = empty_field(roots, first.spacing);
    add_laplacian(roots, frame, act, -1.0 / h2, field.values.data());
    double* out = field.values.data();
    for (std::size_t i0 = roots.lo[0]; i0 < roots.hi[0]; ++i0) {
      for (std::size_t i1 = roots.lo[1]; i1 < roots.hi[1]; ++i1) {
        const double* centre = frame + (i0 * roots.extent[1] + i1) * roots.extent[2] + roots.lo[2];
        kt.second_difference_add(centre, frame_stride, time_scale, out, len);
        out += len;
      }
    }
    divide_by_roots(roots, frame, -k.hbar * k.hbar / mass, field.values.data());
    result.slices.push_back(std::move(field));
  }
  return result;
}

double mean_qp_energy(const GridDensity& density, double mass) {
  require_mass(mass, "mean_qp_energy");
  density.validate();
  RootArray roots = layout_for(density);
  append_roots(density, roots);

  const auto act = active_axes(density.dims);
  const double h = density.spacing;
  const double cell = density.dims == 1 ? h : h * h * h;

  // Normalisation over the full grid.
  double norm = 0.0;
  for (std::size_t ix = 0; ix < density.extent[0]; ++ix) {
    const double wx = act[0] ? end_weight(density.periodic, ix, density.extent[0]) : 1.0;
    for (std::size_t iy = 0; iy < density.extent[1]; ++iy) {
      const double wy = act[1] ? end_weight(density.periodic, iy, density.extent[1]) : 1.0;
      for (std::size_t iz = 0; iz < density.extent[2]; ++iz) {
        const double wz = end_weight(density.periodic, iz, density.extent[2]);
        norm += wx * wy * wz * density.values[density.flat_index(ix, iy, iz)];
      }
    }
  }
  norm *= cell;
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw DomainError("mean_qp_energy: density must have a positive finite integral");
  }

  std::vector<double> lap(roots.region_size(), 0.0);
  add_laplacian(roots, roots.values.data(), act, 1.0 / (h * h), lap.data());

  double integral = 0.0;
  std::size_t o = 0;
  const Extent count{roots.hi[0] - roots.lo[0], roots.hi[1] - roots.lo[1], roots.hi[2] - roots.lo[2]};
  for (std::size_t i0 = 0; i0 < count[0]; ++i0) {
    const double w0 = act[0] ? end_weight(density.periodic, i0, count[0]) : 1.0;
    for (std::size_t i1 = 0; i1 < count[1]; ++i1) {
      const double w1 = act[1] ? end_weight(density.periodic, i1, count[1]) : 1.0;
      const double* centre = roots.values.data() +
                             ((i0 + roots.lo[0]) * roots.extent[1] + i1 + roots.lo[1]) * roots.extent[2] +
                             roots.lo[2];
      double line = 0.0;
      for (std::size_t i2 = 0; i2 < count[2]; ++i2, ++o) {
        line += end_weight(density.periodic, i2, count[2]) * centre[i2] * lap[o];
      }
      integral += w0 * w1 * line;
    }
  }
  integral *= cell;

  const auto& k = constants();
  return -(k.hbar * k.hbar / (2.0 * mass)) * integral / norm;
}

}  // namespace massplanck
