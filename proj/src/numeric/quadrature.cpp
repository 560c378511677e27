#include <cmath>
#include <numbers>

#include "surfq/error.hpp"
#include "surfq/numeric.hpp"

namespace surfq {

QuadratureRule periodic_trapezoid(std::size_t n, double lo, double period) {
  if (n == 0) throw ParameterError("quadrature needs at least one node");
  QuadratureRule r;
  r.nodes.resize(n);
  r.weights.assign(n, period / static_cast<double>(n));
  for (std::size_t j = 0; j < n; ++j) {
    r.nodes[j] = lo + period * static_cast<double>(j) / static_cast<double>(n);
  }
  return r;
}

QuadratureRule gauss_legendre(std::size_t n, double lo, double hi) {
  if (n == 0) throw ParameterError("quadrature needs at least one node");
  QuadratureRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const std::size_t m = (n + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    // Newton on P_n starting from the Chebyshev-like estimate.
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (std::size_t k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p2) / static_cast<double>(k);
      }
      dp = static_cast<double>(n) * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.nodes[i] = mid - half * x;
    r.nodes[n - 1 - i] = mid + half * x;
    r.weights[i] = r.weights[n - 1 - i] = half * w;
  }
  return r;
}

}  // namespace surfq
