#pragma once

#include <cstddef>
#include <span>
#include <string_view>

// Data-parallel inner loops used by quadrature assembly and the Jacobi
// eigensolver. Each kernel has a scalar reference implementation; wider
// variants are compiled in separate translation units and chosen once at
// startup from CPU capabilities. SURFQ_SIMD=scalar|avx2|neon overrides the
// choice.

namespace surfq::simd {

enum class Level { Scalar, Avx2, Neon };

struct KernelTable {
  Level level;
  // sum_i a[i] * b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // sum_i a[i] * b[i] * w[i]
  double (*weighted_dot)(const double* a, const double* b, const double* w, std::size_t n);
  // y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // (x, y) <- (c x - s y, s x + c y)
  void (*rotate)(double* x, double* y, double c, double s, std::size_t n);
};

std::string_view level_name(Level level);

// nullptr when the level was not compiled in or the CPU lacks support.
const KernelTable* kernels_for(Level level);

const KernelTable& active_kernels();

// Returns false (and leaves the selection unchanged) if unavailable.
bool select_level(Level level);

inline double dot(std::span<const double> a, std::span<const double> b) {
  return active_kernels().dot(a.data(), b.data(), a.size());
}

inline double weighted_dot(std::span<const double> a, std::span<const double> b,
                           std::span<const double> w) {
  return active_kernels().weighted_dot(a.data(), b.data(), w.data(), a.size());
}

inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  active_kernels().axpy(alpha, x.data(), y.data(), x.size());
}

inline void rotate(std::span<double> x, std::span<double> y, double c, double s) {
  active_kernels().rotate(x.data(), y.data(), c, s, x.size());
}

}  // namespace surfq::simd
