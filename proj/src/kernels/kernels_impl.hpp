#pragma once

#include "massplanck/kernels.hpp"

namespace massplanck::kernels::detail {

extern const KernelTable kScalarTable;
#if defined(MASSPLANCK_HAVE_AVX2)
extern const KernelTable kAvx2Table;
#endif
#if defined(MASSPLANCK_HAVE_NEON)
extern const KernelTable kNeonTable;
#endif

// Phases are reseeded from libm every this many elements in the vector
// cosine sums, which bounds the drift of the rotation recurrence.
inline constexpr std::size_t kCosineReseedBlock = 256;

}  // namespace massplanck::kernels::detail
