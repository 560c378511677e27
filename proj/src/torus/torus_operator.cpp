#include <cmath>
#include <string>

#include "surfq/error.hpp"
#include "surfq/torus_spectrum.hpp"

namespace surfq {

void TorusProblem::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("alpha must lie in (0,1)");
  if (nu < 0) throw ParameterError("nu must be a non-negative integer");
  if (n_max < 1) throw ParameterError("n_max must be at least 1");
  if (n_quad < 4 * n_max + 8) {
    throw ParameterError("n_quad must be at least 4*n_max + 8 (got " + std::to_string(n_quad) +
                         " for n_max = " + std::to_string(n_max) + ")");
  }
}

std::string_view parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

double TorusOperator::weight(double theta) const { return 1.0 + alpha * std::cos(theta); }

double TorusOperator::potential(double theta) const {
  const double u = weight(theta);
  const double nu2a2 = static_cast<double>(nu) * nu * alpha * alpha;
  if (formulation == Formulation::Laplacian) return (nu2a2 - 0.25) / (u * u);
  // The constant 1/4 is the (beta - 1/4) psi shift of the Hermitian equation.
  return (nu2a2 + 0.25 * (alpha * alpha - 1.0)) / (u * u) + 0.25;
}

TorusOperator torus_operator(double alpha, int nu, Formulation formulation) {
  TorusProblem{alpha, nu, formulation}.validate();
  return TorusOperator{alpha, nu, formulation};
}

double magic_alpha(int nu, Formulation formulation) {
  if (nu < 1) throw ParameterError("magic radius needs nu >= 1 (no cancellation for nu = 0)");
  const double n = static_cast<double>(nu);
  if (formulation == Formulation::Laplacian) return 1.0 / (2.0 * n);
  return std::sqrt(1.0 / (1.0 + 4.0 * n * n));
}

}  // namespace surfq
