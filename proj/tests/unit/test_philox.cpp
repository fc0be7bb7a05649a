#include <doctest.h>

#include <cmath>

#include "massplanck/philox.hpp"

namespace mp = massplanck;
using Block = mp::Philox4x32::Block;

// Known-answer vectors of the Random123 reference implementation (philox4x32-10).
TEST_CASE("philox4x32-10 known answers") {
  CHECK(mp::Philox4x32::generate({0, 0, 0, 0}, {0, 0}) == Block{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
  CHECK(mp::Philox4x32::generate({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, {0xffffffffu, 0xffffffffu}) ==
        Block{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
  CHECK(mp::Philox4x32::generate({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, {0xa4093822u, 0x299f31d0u}) ==
        Block{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("generator is usable at compile time") {
  constexpr auto out = mp::Philox4x32::generate({0, 0, 0, 0}, {0, 0});
  static_assert(out[0] == 0x6627e8d5u);
  CHECK(out[3] == 0x9b00dbd8u);
}

TEST_CASE("seed and counter packing") {
  CHECK(mp::Philox4x32::key_from_seed(0x0123456789abcdefULL) == mp::Philox4x32::Key{0x89abcdefu, 0x01234567u});
  CHECK(mp::Philox4x32::counter(0x100000002ULL, 3) == Block{2u, 1u, 3u, 0u});
}

TEST_CASE("uniform and normal transforms") {
  CHECK(mp::uniform_from_words(0, 0) == 0.0);
  const double top = mp::uniform_from_words(0xffffffffu, 0xffffffffu);
  CHECK(top < 1.0);
  CHECK(top == 1.0 - 0x1.0p-53);
  // u1 = 1 (zero words) gives a zero radius.
  const auto z = mp::normal_pair({0, 0, 123, 456});
  CHECK(z[0] == 0.0);
  CHECK(std::abs(z[1]) == 0.0);

  double s1 = 0.0;
  double s2 = 0.0;
  bool finite = true;
  const int n = 200000;
  const auto key = mp::Philox4x32::key_from_seed(99);
  for (int i = 0; i < n / 2; ++i) {
    const auto p = mp::normal_pair(mp::Philox4x32::generate(mp::Philox4x32::counter(i, 0), key));
    for (double v : p) {
      finite = finite && std::isfinite(v);
      s1 += v;
      s2 += v * v;
    }
  }
  CHECK(finite);
  CHECK(std::abs(s1 / n) < 5.0 / std::sqrt(n));
  CHECK(std::abs(s2 / n - 1.0) < 5.0 * std::sqrt(2.0 / n));
}
