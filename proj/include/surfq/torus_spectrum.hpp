#pragma once

#include <string_view>
#include <vector>

#include "surfq/numeric.hpp"
#include "surfq/operators.hpp"

namespace surfq {

// Dimensionless torus problem: alpha = a/R, beta = 2 E a^2, wavefunction
// psi(theta) e^{i nu phi}.
struct TorusProblem {
  double alpha = 0.5;
  int nu = 0;
  Formulation formulation = Formulation::Laplacian;
  int n_max = 24;   // highest Fourier harmonic
  int n_quad = 128; // trapezoid nodes, at least 4 n_max + 8

  // Throws ParameterError.
  void validate() const;
};

enum class Parity { Even, Odd };

std::string_view parity_name(Parity p);

/// Coefficients of -(1/u)(u psi')' + W psi = beta psi on [0, 2 pi):
/// u = 1 + alpha cos(theta) and
///   laplacian: W = (nu^2 alpha^2 - 1/4)/u^2
///   hermitian: W = (nu^2 alpha^2 + (alpha^2 - 1)/4)/u^2 + 1/4
struct TorusOperator {
  double alpha;
  int nu;
  Formulation formulation;

  double weight(double theta) const;
  double potential(double theta) const;
};

TorusOperator torus_operator(double alpha, int nu, Formulation formulation);

/// Galerkin matrices in the basis {1, cos n theta} (even) or {sin n theta}
/// (odd), n <= n_max, with the u-weighted inner product.
struct GalerkinBlock {
  Parity parity;
  std::vector<int> harmonics;
  Matrix h;  // integral of (phi_m' phi_n' + W phi_m phi_n) u
  Matrix s;  // integral of phi_m phi_n u
};

GalerkinBlock assemble(const TorusProblem& problem, Parity parity);

// Closed-form overlap matrix: tridiagonal in the harmonic index.
Matrix analytic_overlap(const TorusProblem& problem, Parity parity);

/// Same basis, built from general surface-operator coefficients in strong
/// form: H_mn = integral of phi_m (c2 phi_n'' + c1 phi_n' + c0 phi_n) weight,
/// S_mn = integral of phi_m phi_n weight. For a periodic patch only.
GalerkinBlock assemble_from_operator(const OperatorCoeffs& op, Parity parity, int n_max,
                                     int n_quad);

struct SpectrumEntry {
  double beta = 0.0;
  Parity parity = Parity::Even;
  // coeffs[n] multiplies cos(n theta) (even) or sin(n theta) (odd); for odd
  // entries coeffs[0] is 0. Normalized so that the integral of psi^2 u over
  // [0, 2 pi) is 1, largest-magnitude coefficient positive.
  std::vector<double> coeffs;
};

struct SpectrumResult {
  TorusProblem problem;
  std::vector<SpectrumEntry> entries;  // ascending beta
};

SpectrumResult solve_spectrum(const TorusProblem& problem);

// Eigenvalues from the unsplit {1, cos, sin} basis; used to check that the
// parity blocks decouple.
std::vector<double> full_basis_eigenvalues(const TorusProblem& problem);

/// alpha at which the 1/u^2 azimuthal term cancels:
/// laplacian 1/(2 nu), hermitian 1/sqrt(1 + 4 nu^2). Throws for nu < 1.
double magic_alpha(int nu, Formulation formulation);

struct TableRow {
  int nu = 0;
  SpectrumEntry state;
};

/// The `count` lowest states over all nu >= 0 (each nu > 0 is the doubly
/// degenerate pair e^{+-i nu phi}, listed once).
std::vector<TableRow> lowest_states(double alpha, Formulation formulation, int count,
                                    int n_max = 24, int n_quad = 128);

}  // namespace surfq
