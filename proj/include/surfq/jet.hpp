#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace surfq {

/// Truncated derivative jet: d[j] holds the j-th derivative of a scalar
/// function with respect to one independent variable, for j = 0..N.
///
/// Arithmetic propagates derivatives exactly (Leibniz rule for products,
/// Faa di Bruno for elementary functions), so for polynomial expressions
/// the only error is floating-point rounding.
template <int N>
struct Jet {
  static_assert(N >= 0 && N <= 3, "jets are implemented up to third order");
  static constexpr int order = N;

  std::array<double, N + 1> d{};

  static constexpr Jet constant(double v) {
    Jet j;
    j.d[0] = v;
    return j;
  }

  static constexpr Jet variable(double x) {
    Jet j;
    j.d[0] = x;
    if constexpr (N >= 1) j.d[1] = 1.0;
    return j;
  }

  constexpr double value() const { return d[0]; }
  constexpr double operator[](std::size_t i) const { return d[i]; }
  constexpr double& operator[](std::size_t i) { return d[i]; }

  bool finite() const {
    for (double v : d) {
      if (!std::isfinite(v)) return false;
    }
    return true;
  }

  // Keep the first M+1 derivatives.
  template <int M>
  constexpr Jet<M> truncate() const {
    static_assert(M <= N);
    Jet<M> r;
    for (int i = 0; i <= M; ++i) r.d[i] = d[i];
    return r;
  }

  // Jet of the derivative: (f', f'', ...), one order lower.
  constexpr Jet<N - 1> derivative() const
    requires(N >= 1)
  {
    Jet<N - 1> r;
    for (int i = 0; i < N; ++i) r.d[i] = d[i + 1];
    return r;
  }
};

using Jet1 = Jet<1>;
using Jet2 = Jet<2>;
using Jet3 = Jet<3>;

namespace detail {

constexpr double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

template <int N>
constexpr Jet<N> operator-(const Jet<N>& a) {
  Jet<N> r;
  for (int i = 0; i <= N; ++i) r.d[i] = -a.d[i];
  return r;
}

template <int N>
constexpr Jet<N> operator+(const Jet<N>& a, const Jet<N>& b) {
  Jet<N> r;
  for (int i = 0; i <= N; ++i) r.d[i] = a.d[i] + b.d[i];
  return r;
}

template <int N>
constexpr Jet<N> operator-(const Jet<N>& a, const Jet<N>& b) {
  Jet<N> r;
  for (int i = 0; i <= N; ++i) r.d[i] = a.d[i] - b.d[i];
  return r;
}

template <int N>
constexpr Jet<N> operator*(const Jet<N>& a, const Jet<N>& b) {
  Jet<N> r;
  for (int k = 0; k <= N; ++k) {
    double s = 0.0;
    for (int j = 0; j <= k; ++j) s += detail::binomial(k, j) * a.d[j] * b.d[k - j];
    r.d[k] = s;
  }
  return r;
}

template <int N>
constexpr Jet<N> operator+(const Jet<N>& a, double b) {
  Jet<N> r = a;
  r.d[0] += b;
  return r;
}

template <int N>
constexpr Jet<N> operator+(double a, const Jet<N>& b) {
  return b + a;
}

template <int N>
constexpr Jet<N> operator-(const Jet<N>& a, double b) {
  return a + (-b);
}

template <int N>
constexpr Jet<N> operator-(double a, const Jet<N>& b) {
  return (-b) + a;
}

template <int N>
constexpr Jet<N> operator*(const Jet<N>& a, double b) {
  Jet<N> r;
  for (int i = 0; i <= N; ++i) r.d[i] = a.d[i] * b;
  return r;
}

template <int N>
constexpr Jet<N> operator*(double a, const Jet<N>& b) {
  return b * a;
}

/// Chain rule: returns the jet of f(x) given f and its derivatives
/// f0..f3 evaluated at x.value().
template <int N>
constexpr Jet<N> compose(const Jet<N>& x, const std::array<double, 4>& f) {
  Jet<N> r;
  r.d[0] = f[0];
  if constexpr (N >= 1) r.d[1] = f[1] * x.d[1];
  if constexpr (N >= 2) r.d[2] = f[2] * x.d[1] * x.d[1] + f[1] * x.d[2];
  if constexpr (N >= 3)
    r.d[3] = f[3] * x.d[1] * x.d[1] * x.d[1] + 3.0 * f[2] * x.d[1] * x.d[2] + f[1] * x.d[3];
  return r;
}

template <int N>
Jet<N> reciprocal(const Jet<N>& x) {
  const double v = x.d[0];
  const double inv = 1.0 / v;
  return compose(x, {inv, -inv * inv, 2.0 * inv * inv * inv, -6.0 * inv * inv * inv * inv});
}

template <int N>
Jet<N> operator/(const Jet<N>& a, const Jet<N>& b) {
  return a * reciprocal(b);
}

template <int N>
Jet<N> operator/(const Jet<N>& a, double b) {
  return a * (1.0 / b);
}

template <int N>
Jet<N> operator/(double a, const Jet<N>& b) {
  return a * reciprocal(b);
}

template <int N>
Jet<N> sin(const Jet<N>& x) {
  const double s = std::sin(x.d[0]), c = std::cos(x.d[0]);
  return compose(x, {s, c, -s, -c});
}

template <int N>
Jet<N> cos(const Jet<N>& x) {
  const double s = std::sin(x.d[0]), c = std::cos(x.d[0]);
  return compose(x, {c, -s, -c, s});
}

template <int N>
Jet<N> tan(const Jet<N>& x) {
  const double t = std::tan(x.d[0]);
  const double sec2 = 1.0 + t * t;
  return compose(x, {t, sec2, 2.0 * t * sec2, 2.0 * sec2 * (1.0 + 3.0 * t * t)});
}

template <int N>
Jet<N> exp(const Jet<N>& x) {
  const double e = std::exp(x.d[0]);
  return compose(x, {e, e, e, e});
}

template <int N>
Jet<N> log(const Jet<N>& x) {
  const double inv = 1.0 / x.d[0];
  return compose(x, {std::log(x.d[0]), inv, -inv * inv, 2.0 * inv * inv * inv});
}

template <int N>
Jet<N> sqrt(const Jet<N>& x) {
  const double r = std::sqrt(x.d[0]);
  const double inv = 1.0 / x.d[0];
  return compose(x, {r, 0.5 / r, -0.25 * r * inv * inv, 0.375 * r * inv * inv * inv});
}

template <int N>
Jet<N> sinh(const Jet<N>& x) {
  const double s = std::sinh(x.d[0]), c = std::cosh(x.d[0]);
  return compose(x, {s, c, s, c});
}

template <int N>
Jet<N> cosh(const Jet<N>& x) {
  const double s = std::sinh(x.d[0]), c = std::cosh(x.d[0]);
  return compose(x, {c, s, c, s});
}

template <int N>
Jet<N> tanh(const Jet<N>& x) {
  const double t = std::tanh(x.d[0]);
  const double s = 1.0 - t * t;
  return compose(x, {t, s, -2.0 * t * s, s * (6.0 * t * t - 2.0)});
}

/// x^e for a constant exponent. Integer exponents accept negative bases;
/// falling-factorial factors that vanish are dropped so polynomials stay
/// finite at x = 0.
template <int N>
Jet<N> pow(const Jet<N>& x, double e) {
  std::array<double, 4> f{};
  double falling = 1.0;
  for (int j = 0; j <= 3; ++j) {
    f[j] = falling == 0.0 ? 0.0 : falling * std::pow(x.d[0], e - j);
    falling *= (e - j);
  }
  return compose(x, f);
}

template <int N>
Jet<N> square(const Jet<N>& x) {
  return x * x;
}

}  // namespace surfq
