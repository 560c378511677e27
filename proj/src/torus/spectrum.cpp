#include <algorithm>
#include <cmath>
#include <numbers>

#include "basis.hpp"
#include "surfq/error.hpp"
#include "surfq/simd.hpp"

namespace surfq {

namespace {

// States closer than this are treated as degenerate when ordering.
double degeneracy_tolerance(double beta) { return 1e-9 * std::max(1.0, std::fabs(beta)); }

double overlap_norm(const Matrix& s, std::span<const double> c) {
  const std::vector<double> sc = multiply(s, c);
  return std::sqrt(simd::dot(c, sc));
}

SpectrumEntry make_entry(const GalerkinBlock& block, double beta, std::span<const double> c,
                         int n_max) {
  SpectrumEntry e;
  e.beta = beta;
  e.parity = block.parity;
  e.coeffs.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
  const double norm = overlap_norm(block.s, c);
  std::size_t largest = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (std::fabs(c[i]) > std::fabs(c[largest])) largest = i;
  }
  const double sign = c[largest] < 0.0 ? -1.0 : 1.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    e.coeffs[static_cast<std::size_t>(block.harmonics[i])] = sign * c[i] / norm;
  }
  return e;
}

// Ascending beta; within a degenerate cluster odd parity comes first.
template <class T, class Beta, class Odd>
void order_states(std::vector<T>& states, Beta beta, Odd odd_first_key) {
  std::stable_sort(states.begin(), states.end(),
                   [&](const T& a, const T& b) { return beta(a) < beta(b); });
  std::size_t start = 0;
  while (start < states.size()) {
    std::size_t end = start + 1;
    const double b0 = beta(states[start]);
    while (end < states.size() && beta(states[end]) - b0 <= degeneracy_tolerance(b0)) ++end;
    std::stable_sort(states.begin() + static_cast<std::ptrdiff_t>(start),
                     states.begin() + static_cast<std::ptrdiff_t>(end),
                     [&](const T& a, const T& b) { return odd_first_key(a) < odd_first_key(b); });
    start = end;
  }
}

}  // namespace

SpectrumResult solve_spectrum(const TorusProblem& problem) {
  problem.validate();
  SpectrumResult result{problem, {}};
  for (Parity parity : {Parity::Even, Parity::Odd}) {
    const GalerkinBlock block = assemble(problem, parity);
    const SymmetricEigen eig = generalized_eigen(block.h, block.s);
    for (std::size_t i = 0; i < eig.values.size(); ++i) {
      result.entries.push_back(make_entry(block, eig.values[i], eig.vectors.row(i), problem.n_max));
    }
  }
  order_states(
      result.entries, [](const SpectrumEntry& e) { return e.beta; },
      [](const SpectrumEntry& e) { return e.parity == Parity::Odd ? 0 : 1; });
  return result;
}

std::vector<double> full_basis_eigenvalues(const TorusProblem& problem) {
  problem.validate();
  const TorusOperator op{problem.alpha, problem.nu, problem.formulation};
  const QuadratureRule rule =
      periodic_trapezoid(static_cast<std::size_t>(problem.n_quad), 0.0, 2.0 * std::numbers::pi);
  const auto even = torus_detail::sample_basis(Parity::Even, problem.n_max, rule);
  const auto odd = torus_detail::sample_basis(Parity::Odd, problem.n_max, rule);

  // Interleave 1, cos, sin, cos 2, sin 2, ...
  std::vector<std::span<const double>> value, d1;
  for (std::size_t i = 0; i < even.harmonics.size(); ++i) {
    value.push_back(even.value.row(i));
    d1.push_back(even.d1.row(i));
    if (i > 0) {
      value.push_back(odd.value.row(i - 1));
      d1.push_back(odd.d1.row(i - 1));
    }
  }

  const std::size_t nq = rule.nodes.size();
  std::vector<double> wu(nq), wwu(nq);
  for (std::size_t j = 0; j < nq; ++j) {
    wu[j] = rule.weights[j] * op.weight(rule.nodes[j]);
    wwu[j] = wu[j] * op.potential(rule.nodes[j]);
  }
  const std::size_t n = value.size();
  Matrix h(n, n), s(n, n);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = m; k < n; ++k) {
      h(m, k) = h(k, m) = simd::weighted_dot(d1[m], d1[k], wu) +
                          simd::weighted_dot(value[m], value[k], wwu);
      s(m, k) = s(k, m) = simd::weighted_dot(value[m], value[k], wu);
    }
  }
  return generalized_eigen(h, s).values;
}

std::vector<TableRow> lowest_states(double alpha, Formulation formulation, int count, int n_max,
                                    int n_quad) {
  if (count < 1) throw ParameterError("state count must be positive");
  constexpr int kMaxNu = 1000;
  std::vector<TableRow> rows;
  for (int nu = 0; nu <= kMaxNu; ++nu) {
    const SpectrumResult r = solve_spectrum(TorusProblem{alpha, nu, formulation, n_max, n_quad});
    // The nu-ground state rises with nu^2, so nothing beyond can enter.
    if (static_cast<int>(rows.size()) >= count &&
        r.entries.front().beta > rows[static_cast<std::size_t>(count) - 1].state.beta +
                                     degeneracy_tolerance(r.entries.front().beta)) {
      break;
    }
    for (std::size_t i = 0; i < r.entries.size() && static_cast<int>(i) < count; ++i) {
      rows.push_back(TableRow{nu, r.entries[i]});
    }
    order_states(
        rows, [](const TableRow& t) { return t.state.beta; },
        [](const TableRow& t) { return std::pair{t.state.parity == Parity::Odd ? 0 : 1, t.nu}; });
    if (static_cast<int>(rows.size()) > count) rows.resize(static_cast<std::size_t>(count));
    if (nu == kMaxNu) throw ConvergenceError("state search exceeded nu = 1000");
  }
  return rows;
}

}  // namespace surfq
