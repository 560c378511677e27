#pragma once

#include "surfq/simd.hpp"

namespace surfq::simd {

const KernelTable& scalar_kernels();
#if defined(SURFQ_HAVE_AVX2)
const KernelTable& avx2_kernels();
#endif
#if defined(SURFQ_HAVE_NEON)
const KernelTable& neon_kernels();
#endif

}  // namespace surfq::simd
