#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "surfq/error.hpp"
#include "surfq/numeric.hpp"
#include "surfq/simd.hpp"

namespace surfq {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const Matrix bt = b.transposed();
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = simd::dot(a.row(i), bt.row(j));
  return c;
}

std::vector<double> multiply(const Matrix& a, std::span<const double> x) {
  std::vector<double> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) y[i] = simd::dot(a.row(i), x);
  return y;
}

double max_abs_difference(const Matrix& a, const Matrix& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::fabs(a(i, j) - b(i, j)));
  return m;
}

double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) s += simd::dot(a.row(i), a.row(i));
  return std::sqrt(s);
}

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

Matrix cholesky(const Matrix& a) {
  const std::size_t n = a.rows();
  Matrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto lj = l.row(j).first(j);
    const double pivot = a(j, j) - simd::dot(lj, lj);
    if (!(pivot > 0.0)) {
      throw ConditioningError("overlap matrix is not positive definite (pivot " +
                              std::to_string(j) + ")");
    }
    const double d = std::sqrt(pivot);
    l(j, j) = d;
    for (std::size_t i = j + 1; i < n; ++i) {
      l(i, j) = (a(i, j) - simd::dot(l.row(i).first(j), lj)) / d;
    }
  }
  return l;
}

Matrix invert_lower_triangular(const Matrix& l) {
  const std::size_t n = l.rows();
  // Row i of the inverse solves L x = e_i column-wise; build it by
  // forward substitution on the transposed system.
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    inv(i, i) = 1.0 / l(i, i);
    for (std::size_t j = 0; j < i; ++j) {
      double s = 0.0;
      for (std::size_t k = j; k < i; ++k) s += l(i, k) * inv(k, j);
      inv(i, j) = -s / l(i, i);
    }
  }
  return inv;
}

SymmetricEigen jacobi_eigen(Matrix a, const JacobiOptions& opts) {
  const std::size_t n = a.rows();
  Matrix vt = Matrix::identity(n);
  const double threshold = opts.tolerance * std::max(1.0, frobenius_norm(a));

  int sweep = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (sweep == opts.max_sweeps) {
      throw ConvergenceError("Jacobi iteration did not converge after " +
                             std::to_string(opts.max_sweeps) + " sweeps");
    }
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p), aqq = a(q, q);
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = std::copysign(1.0, tau) / (std::fabs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = t * c;

        // A <- J^T A J: rotate rows p, q, then mirror into the columns.
        simd::rotate(a.row(p), a.row(q), c, s);
        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          a(i, p) = a(p, i);
          a(i, q) = a(q, i);
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        simd::rotate(vt.row(p), vt.row(q), c, s);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&a](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  SymmetricEigen out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  out.sweeps = sweep;
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    std::copy_n(vt.row(order[k]).begin(), n, out.vectors.row(k).begin());
  }
  return out;
}

SymmetricEigen generalized_eigen(const Matrix& h, const Matrix& s, const JacobiOptions& opts) {
  const std::size_t n = h.rows();
  const Matrix linv = invert_lower_triangular(cholesky(s));

  // B = L^-1 H; H symmetric so (L^-1 H)_ij = <linv_i, h_j>.
  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = simd::dot(linv.row(i), h.row(j));
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = simd::dot(b.row(i), linv.row(j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = a(j, i) = 0.5 * (a(i, j) + a(j, i));

  SymmetricEigen eig = jacobi_eigen(std::move(a), opts);

  // c = L^-T y = sum_k y_k * linv_k
  Matrix c(n, n);
  for (std::size_t e = 0; e < n; ++e) {
    const auto y = eig.vectors.row(e);
    for (std::size_t k = 0; k < n; ++k) simd::axpy(y[k], linv.row(k), c.row(e));
  }
  eig.vectors = std::move(c);
  return eig;
}

}  // namespace surfq
