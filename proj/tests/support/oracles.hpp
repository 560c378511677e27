#pragma once

// Reference computations that share no code with the library: RK4 shooting
// for the torus eigenproblem and composite Simpson integration.

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

inline double simpson(const std::function<double(double)>& f, double lo, double hi, int n = 4000) {
  if (n % 2) ++n;
  const double h = (hi - lo) / n;
  double s = f(lo) + f(hi);
  for (int i = 1; i < n; ++i) s += f(lo + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

// Coefficient function of -(1/u)(u psi')' + W psi = beta psi.
inline double torus_w(double alpha, int nu, bool hermitian, double t) {
  const double u = 1.0 + alpha * std::cos(t);
  const double n2a2 = nu * nu * alpha * alpha;
  if (!hermitian) return (n2a2 - 0.25) / (u * u);
  return (n2a2 + 0.25 * (alpha * alpha - 1.0)) / (u * u) + 0.25;
}

// Integrates y = (psi, u psi') over [0, pi]. Even states start from
// (1, 0) and need psi'(pi) = 0; odd states start from (0, 1) and need
// psi(pi) = 0. Returns the quantity that must vanish.
inline double shoot(double alpha, int nu, bool hermitian, bool odd, double beta, int steps = 3000) {
  auto rhs = [&](double t, double p, double q, double& dp, double& dq) {
    const double u = 1.0 + alpha * std::cos(t);
    dp = q / u;
    dq = u * (torus_w(alpha, nu, hermitian, t) - beta) * p;
  };
  double p = odd ? 0.0 : 1.0, q = odd ? 1.0 : 0.0;
  const double h = std::numbers::pi / steps;
  for (int i = 0; i < steps; ++i) {
    const double t = i * h;
    double k1p, k1q, k2p, k2q, k3p, k3q, k4p, k4q;
    rhs(t, p, q, k1p, k1q);
    rhs(t + h / 2, p + h / 2 * k1p, q + h / 2 * k1q, k2p, k2q);
    rhs(t + h / 2, p + h / 2 * k2p, q + h / 2 * k2q, k3p, k3q);
    rhs(t + h, p + h * k3p, q + h * k3q, k4p, k4q);
    p += h / 6 * (k1p + 2 * k2p + 2 * k3p + k4p);
    q += h / 6 * (k1q + 2 * k2q + 2 * k3q + k4q);
  }
  return odd ? p : q;
}

// Lowest `count` eigenvalues of one parity block, by scanning for sign
// changes of the shooting residual and bisecting.
inline std::vector<double> shooting_eigenvalues(double alpha, int nu, bool hermitian, bool odd,
                                                int count, double lo = -3.0, double step = 0.05) {
  std::vector<double> roots;
  double a = lo, fa = shoot(alpha, nu, hermitian, odd, a);
  while (static_cast<int>(roots.size()) < count && a < 200.0) {
    const double b = a + step;
    const double fb = shoot(alpha, nu, hermitian, odd, b);
    if (fa == 0.0 || fa * fb < 0.0) {
      double x = a, y = b, fx = fa;
      for (int it = 0; it < 80; ++it) {
        const double m = 0.5 * (x + y);
        const double fm = shoot(alpha, nu, hermitian, odd, m);
        if ((fm < 0.0) == (fx < 0.0)) {
          x = m;
          fx = fm;
        } else {
          y = m;
        }
      }
      roots.push_back(0.5 * (x + y));
    }
    a = b;
    fa = fb;
  }
  return roots;
}

// Cosine coefficients of the normalized u^{-1/2}: the function has unit
// norm under the u-weighted inner product on [0, 2 pi).
inline std::vector<double> zero_mode_coefficients(double alpha, int n_max) {
  const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  std::vector<double> c(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    const double integral = simpson(
        [&](double t) { return std::cos(n * t) / std::sqrt(1.0 + alpha * std::cos(t)); }, 0.0,
        2.0 * std::numbers::pi, 20000);
    c[static_cast<std::size_t>(n)] = norm * integral / (n == 0 ? 2.0 * std::numbers::pi : std::numbers::pi);
  }
  return c;
}

}  // namespace oracle
