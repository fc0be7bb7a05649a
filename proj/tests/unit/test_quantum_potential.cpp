#include <doctest.h>

#include <cmath>
#include <vector>

#include "massplanck/constants.hpp"
#include "massplanck/errors.hpp"
#include "massplanck/quantum_potential.hpp"

namespace mp = massplanck;

namespace {

// ħ = m = 1 inside the prefactors.
const double kUnitMass = mp::constants().hbar * mp::constants().hbar;
const double kTwoPiSq = 2.0 * mp::pi * mp::pi;

mp::GridDensity cos2_line(std::size_t per_wavelength, std::size_t wavelengths) {
  const double h = 1.0 / static_cast<double>(per_wavelength);
  std::vector<double> v(per_wavelength * wavelengths);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double c = std::cos(2.0 * mp::pi * (static_cast<double>(i) + 0.5) * h);
    v[i] = c * c;
  }
  return mp::GridDensity::line(std::move(v), h, true);
}

}  // namespace

TEST_CASE("constant density has zero potential") {
  const auto grid = mp::GridDensity::line(std::vector<double>(32, 2.5), 0.1, false);
  const auto field = mp::vqu_grid_nonrel(grid, 1.0);
  CHECK(field.size() == 30);
  CHECK(field.offset[2] == 1);
  for (double v : field.values) CHECK(v == 0.0);
  CHECK(mp::mean_qp_energy(grid, 1.0) == 0.0);

  const auto cube = mp::GridDensity::cube(std::vector<double>(8 * 9 * 10, 1.0), {8, 9, 10}, 0.5, true);
  const auto f3 = mp::vqu_grid_nonrel(cube, 1.0);
  CHECK(f3.size() == 720);
  for (double v : f3.values) CHECK(v == 0.0);
}

TEST_CASE("cos2 mode away from nodes approaches 2 pi^2") {
  const auto grid = cos2_line(512, 1);
  const auto field = mp::vqu_grid_nonrel(grid, kUnitMass);
  const double h = grid.spacing;
  // Points near q = 0 and q = 1/2 are far from the nodes at 1/4, 3/4.
  for (std::size_t i : {0ul, 255ul, 256ul, 511ul}) {
    CHECK(field.values[i] == doctest::Approx(kTwoPiSq).epsilon(4.0 * h * h * 4.0 * mp::pi * mp::pi));
  }
  CHECK(mp::vqu_sinusoid(1.0, kUnitMass) == doctest::Approx(kTwoPiSq).epsilon(1e-15));
}

TEST_CASE("Gaussian density at the origin gives +1/2") {
  // q in [-5, 5]: the tails stay above the node threshold.
  const std::size_t n = 1001;
  const double h = 0.01;
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double q = (static_cast<double>(i) - 500.0) * h;
    v[i] = std::exp(-q * q);
  }
  const auto grid = mp::GridDensity::line(v, h, false);
  const auto field = mp::vqu_grid_nonrel(grid, kUnitMass);
  // Evaluated region starts at index 1, so q = 0 is entry 499.
  CHECK(field.values[499] == doctest::Approx(0.5).epsilon(1e-4));
  // ⟨V⟩ = ∫ n V / ∫ n = 1/(8σ²) with σ² = 1/2.
  CHECK(mp::mean_qp_energy(grid, kUnitMass) == doctest::Approx(0.25).epsilon(1e-4));
}

TEST_CASE("sinusoid scaling") {
  const double v1 = mp::vqu_sinusoid(2.0, 1.0);
  CHECK(mp::vqu_sinusoid(1.0, 1.0) == doctest::Approx(4.0 * v1).epsilon(1e-15));
  CHECK(mp::vqu_sinusoid(1e150, 1.0) < 1e-300);
  CHECK_THROWS_AS(mp::vqu_sinusoid(0.0, 1.0), mp::DomainError);
  CHECK_THROWS_AS(mp::vqu_sinusoid(1.0, 0.0), mp::DomainError);
}

TEST_CASE("traveling mode") {
  CHECK(mp::vqu_traveling({1.0, 1.0, 0.0}) == 0.0);
  const double rest = mp::vqu_traveling({1.0, 0.0, kUnitMass});
  CHECK(rest == doctest::Approx(-4.0 * mp::pi * mp::pi).epsilon(1e-15));
  CHECK(mp::vqu_traveling({1.0, 0.8, kUnitMass}) == doctest::Approx(0.36 * rest).epsilon(1e-14));
  CHECK_THROWS_AS(mp::vqu_traveling({1.0, 0.5, 0.0}), mp::DomainError);
  CHECK_THROWS_AS(mp::vqu_traveling({1.0, 1.5, 1.0}), mp::DomainError);
}

TEST_CASE("mean potential energy of the cos2 mode") {
  // No exception at the nodes in the division-free form. √n = |cos| has a
  // kink at each node, so the error is first order in h (about 4h relative).
  double previous = 0.0;
  for (std::size_t per : {256ul, 512ul, 1024ul}) {
    const double h = 1.0 / static_cast<double>(per);
    const double err = std::abs(mp::mean_qp_energy(cos2_line(per, 2), kUnitMass) / kTwoPiSq - 1.0);
    CHECK(err < 8.0 * h);
    if (previous > 0.0) CHECK(previous / err == doctest::Approx(2.0).epsilon(0.05));
    previous = err;
  }
}

TEST_CASE("node at an evaluation point is reported") {
  std::vector<double> v(16, 1.0);
  v[5] = 0.0;
  const auto grid = mp::GridDensity::line(v, 0.1, false);
  try {
    (void)mp::vqu_grid_nonrel(grid, 1.0);
    FAIL("expected SingularDensity");
  } catch (const mp::SingularDensity& e) {
    CHECK(e.flat_index() == 5);
  }
  // A node on the (non-evaluated) boundary is legal.
  std::vector<double> edge(16, 1.0);
  edge[0] = 0.0;
  CHECK_NOTHROW(mp::vqu_grid_nonrel(mp::GridDensity::line(edge, 0.1, false), 1.0));
}

TEST_CASE("grid invariants") {
  CHECK_THROWS_AS(mp::GridDensity::line(std::vector<double>(7, 1.0), 0.1, false).validate(), mp::DomainError);
  std::vector<double> neg(16, 1.0);
  neg[3] = -1e-3;
  CHECK_THROWS_AS(mp::vqu_grid_nonrel(mp::GridDensity::line(neg, 0.1, false), 1.0), mp::DomainError);
  CHECK_THROWS_AS(mp::vqu_grid_nonrel(mp::GridDensity::line(std::vector<double>(16, 1.0), 0.1, false), 0.0),
                  mp::DomainError);
  CHECK_THROWS_AS(mp::GridDensity::cube(std::vector<double>(10, 1.0), {8, 8, 8}, 0.1, true).validate(),
                  mp::DomainError);
}

TEST_CASE("3-D product mode sums the axis curvatures") {
  const std::size_t n = 32;
  const double h = 1.0 / n;
  std::vector<double> v(n * n * n);
  auto c2 = [&](std::size_t i) {
    const double c = std::cos(2.0 * mp::pi * (static_cast<double>(i) + 0.5) * h);
    return c * c;
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) v[(x * n + y) * n + z] = c2(x) * c2(y) * c2(z);
  const auto grid = mp::GridDensity::cube(std::move(v), {n, n, n}, h, true);
  const auto field = mp::vqu_grid_nonrel(grid, kUnitMass);
  // Far from nodes each axis contributes 2π², so the total is 6π².
  CHECK(field.at(0, 0, 0) == doctest::Approx(3.0 * kTwoPiSq).epsilon(0.01));
  CHECK(field.at(0, 0, 0) == doctest::Approx(field.at(16, 0, 15)).epsilon(1e-9));
}

TEST_CASE("d'Alembertian: static slices double the magnitude with opposite sign") {
  const auto frame = cos2_line(512, 1);
  const std::vector<mp::GridDensity> frames(3, frame);
  const auto result = mp::vqu_grid_dalembert(frames, kUnitMass, 1e-9);
  REQUIRE(result.slices.size() == 1);
  CHECK(result.first_slice == 1);
  const auto nonrel = mp::vqu_grid_nonrel(frame, kUnitMass);
  CHECK(result.slices[0].values[0] == doctest::Approx(-2.0 * nonrel.values[0]).epsilon(1e-12));
  CHECK(result.slices[0].values[0] == doctest::Approx(mp::vqu_traveling({1.0, 0.0, kUnitMass})).epsilon(1e-4));

  const std::vector<mp::GridDensity> flat(4, mp::GridDensity::line(std::vector<double>(16, 1.0), 0.1, true));
  for (const auto& s : mp::vqu_grid_dalembert(flat, 1.0, 1.0).slices)
    for (double v : s.values) CHECK(v == 0.0);
  CHECK_THROWS_AS(mp::vqu_grid_dalembert(std::span(flat.data(), 2), 1.0, 1.0), mp::DomainError);
}
