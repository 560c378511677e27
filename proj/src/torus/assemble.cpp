#include <cmath>
#include <cstdlib>
#include <numbers>

#include "basis.hpp"
#include "surfq/error.hpp"
#include "surfq/simd.hpp"

namespace surfq {

namespace torus_detail {

std::vector<int> harmonics_for(Parity parity, int n_max) {
  std::vector<int> h;
  for (int n = parity == Parity::Even ? 0 : 1; n <= n_max; ++n) h.push_back(n);
  return h;
}

SampledBasis sample_basis(Parity parity, int n_max, const QuadratureRule& rule) {
  SampledBasis b;
  b.harmonics = harmonics_for(parity, n_max);
  const std::size_t rows = b.harmonics.size(), cols = rule.nodes.size();
  b.value = Matrix(rows, cols);
  b.d1 = Matrix(rows, cols);
  b.d2 = Matrix(rows, cols);
  for (std::size_t m = 0; m < rows; ++m) {
    const double n = b.harmonics[m];
    for (std::size_t j = 0; j < cols; ++j) {
      const double c = std::cos(n * rule.nodes[j]), s = std::sin(n * rule.nodes[j]);
      if (parity == Parity::Even) {
        b.value(m, j) = c;
        b.d1(m, j) = -n * s;
        b.d2(m, j) = -n * n * c;
      } else {
        b.value(m, j) = s;
        b.d1(m, j) = n * c;
        b.d2(m, j) = -n * n * s;
      }
    }
  }
  return b;
}

}  // namespace torus_detail

using torus_detail::sample_basis;

GalerkinBlock assemble(const TorusProblem& problem, Parity parity) {
  problem.validate();
  const TorusOperator op{problem.alpha, problem.nu, problem.formulation};
  const QuadratureRule rule =
      periodic_trapezoid(static_cast<std::size_t>(problem.n_quad), 0.0, 2.0 * std::numbers::pi);
  const auto basis = sample_basis(parity, problem.n_max, rule);

  const std::size_t nq = rule.nodes.size();
  std::vector<double> wu(nq), wwu(nq);
  for (std::size_t j = 0; j < nq; ++j) {
    const double u = op.weight(rule.nodes[j]);
    wu[j] = rule.weights[j] * u;
    wwu[j] = wu[j] * op.potential(rule.nodes[j]);
  }

  const std::size_t n = basis.harmonics.size();
  GalerkinBlock block{parity, basis.harmonics, Matrix(n, n), Matrix(n, n)};
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = m; k < n; ++k) {
      const double h = simd::weighted_dot(basis.d1.row(m), basis.d1.row(k), wu) +
                       simd::weighted_dot(basis.value.row(m), basis.value.row(k), wwu);
      const double s = simd::weighted_dot(basis.value.row(m), basis.value.row(k), wu);
      block.h(m, k) = block.h(k, m) = h;
      block.s(m, k) = block.s(k, m) = s;
    }
  }
  return block;
}

Matrix analytic_overlap(const TorusProblem& problem, Parity parity) {
  const auto harmonics = torus_detail::harmonics_for(parity, problem.n_max);
  const std::size_t n = harmonics.size();
  const double pi = std::numbers::pi;
  Matrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int a = harmonics[i], b = harmonics[j];
      double v = 0.0;
      if (a == b) v = (a == 0) ? 2.0 * pi : pi;
      if (std::abs(a - b) == 1) {
        // cos a cos b cos = (1/2)[cos(a-b) + cos(a+b)] cos; the a+b = 1 term
        // only exists for the (0, 1) pair.
        const double extra = (parity == Parity::Even && a + b == 1) ? 1.0 : 0.0;
        v = problem.alpha * 0.5 * pi * (1.0 + extra);
      }
      s(i, j) = v;
    }
  }
  return s;
}

GalerkinBlock assemble_from_operator(const OperatorCoeffs& op, Parity parity, int n_max,
                                     int n_quad) {
  const Domain& dom = op.patch().domain();
  if (dom.kind != BoundaryKind::Periodic) {
    throw ParameterError("Fourier assembly needs a periodic patch");
  }
  if (n_quad < 4 * n_max + 8) throw ParameterError("n_quad must be at least 4*n_max + 8");
  const QuadratureRule rule = periodic_trapezoid(static_cast<std::size_t>(n_quad), dom.lo,
                                                 dom.length());
  const auto basis = sample_basis(parity, n_max, rule);

  const std::size_t nq = rule.nodes.size();
  std::vector<double> w2(nq), w1(nq), w0(nq), wm(nq);
  for (std::size_t j = 0; j < nq; ++j) {
    const OperatorPoint p = op.at(rule.nodes[j]);
    const double base = rule.weights[j] * p.weight;
    wm[j] = base;
    w2[j] = base * p.c2;
    w1[j] = base * p.c1;
    w0[j] = base * p.c0;
  }

  const std::size_t n = basis.harmonics.size();
  GalerkinBlock block{parity, basis.harmonics, Matrix(n, n), Matrix(n, n)};
  for (std::size_t m = 0; m < n; ++m) {
    const auto phi_m = basis.value.row(m);
    for (std::size_t k = 0; k < n; ++k) {
      block.h(m, k) = simd::weighted_dot(phi_m, basis.d2.row(k), w2) +
                      simd::weighted_dot(phi_m, basis.d1.row(k), w1) +
                      simd::weighted_dot(phi_m, basis.value.row(k), w0);
      block.s(m, k) = simd::weighted_dot(phi_m, basis.value.row(k), wm);
    }
  }
  return block;
}

}  // namespace surfq
