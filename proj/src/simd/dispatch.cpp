#include <atomic>
#include <cstdlib>
#include <string_view>

#include "kernels.hpp"

namespace surfq::simd {

namespace {

bool cpu_supports(Level level) {
  switch (level) {
    case Level::Scalar: return true;
    case Level::Avx2:
#if defined(SURFQ_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Level::Neon:
#if defined(SURFQ_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable* initial_table() {
  if (const char* env = std::getenv("SURFQ_SIMD")) {
    const std::string_view want(env);
    for (Level l : {Level::Scalar, Level::Avx2, Level::Neon}) {
      if (want == level_name(l)) {
        if (const KernelTable* t = kernels_for(l)) return t;
      }
    }
  }
  for (Level l : {Level::Avx2, Level::Neon}) {
    if (const KernelTable* t = kernels_for(l)) return t;
  }
  return &scalar_kernels();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

std::string_view level_name(Level level) {
  switch (level) {
    case Level::Scalar: return "scalar";
    case Level::Avx2: return "avx2";
    case Level::Neon: return "neon";
  }
  return "unknown";
}

const KernelTable* kernels_for(Level level) {
  if (!cpu_supports(level)) return nullptr;
  switch (level) {
    case Level::Scalar: return &scalar_kernels();
#if defined(SURFQ_HAVE_AVX2)
    case Level::Avx2: return &avx2_kernels();
#endif
#if defined(SURFQ_HAVE_NEON)
    case Level::Neon: return &neon_kernels();
#endif
    default: return nullptr;
  }
}

const KernelTable& active_kernels() { return *current().load(std::memory_order_acquire); }

bool select_level(Level level) {
  const KernelTable* t = kernels_for(level);
  if (t == nullptr) return false;
  current().store(t, std::memory_order_release);
  return true;
}

}  // namespace surfq::simd
