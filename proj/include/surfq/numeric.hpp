#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace surfq {

// Dense row-major matrix. Rows are contiguous so they can be handed to the
// SIMD kernels directly.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  Matrix transposed() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
std::vector<double> multiply(const Matrix& a, std::span<const double> x);
double max_abs_difference(const Matrix& a, const Matrix& b);
double frobenius_norm(const Matrix& a);
double off_diagonal_norm(const Matrix& a);

// Lower-triangular L with a = L L^T. Throws ConditioningError when a pivot
// is not positive.
Matrix cholesky(const Matrix& a);
Matrix invert_lower_triangular(const Matrix& l);

struct SymmetricEigen {
  std::vector<double> values;  // ascending
  Matrix vectors;              // row i is the eigenvector of values[i]
  int sweeps = 0;
};

struct JacobiOptions {
  // Stop once off(A) <= tolerance * max(1, ||A||_F).
  double tolerance = 1e-12;
  int max_sweeps = 64;
};

/// Cyclic Jacobi diagonalization of a dense symmetric matrix.
/// Throws ConvergenceError after max_sweeps.
SymmetricEigen jacobi_eigen(Matrix a, const JacobiOptions& opts = {});

/// Generalized problem h c = beta s c with s symmetric positive definite.
/// s is factored as L L^T, the whitened matrix L^-1 h L^-T is diagonalized
/// and eigenvectors back-transformed, so that c^T s c = 1.
SymmetricEigen generalized_eigen(const Matrix& h, const Matrix& s,
                                 const JacobiOptions& opts = {});

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n equispaced nodes on [lo, lo + period) with equal weights.
QuadratureRule periodic_trapezoid(std::size_t n, double lo, double period);

// n-point Gauss-Legendre rule on [lo, hi].
QuadratureRule gauss_legendre(std::size_t n, double lo, double hi);

}  // namespace surfq
