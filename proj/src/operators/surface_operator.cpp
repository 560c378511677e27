#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "surfq/error.hpp"
#include "surfq/operators.hpp"

namespace surfq {

OperatorCoeffs::OperatorCoeffs(MetricPatch patch, Formulation formulation, int nu,
                               Ordering ordering)
    : patch_(std::move(patch)),
      momenta_(hermitian_momenta(patch_)),
      formulation_(formulation),
      nu_(nu),
      ordering_(ordering) {}

OperatorPoint OperatorCoeffs::at(double w) const {
  const MetricPoint p = patch_.at(w);
  if (p.a2 == 0.0) {
    throw DomainError("surface operator is singular on the symmetry axis (" +
                      std::string(coordinate_name(patch_.coordinate())) + " = " +
                      std::to_string(w) + ")");
  }
  const CurvatureSample curv = curvature_sample(p);

  const double g = 1.0 / (p.a1 * p.a1);  // inverse metric coefficient 1/a1^2
  const double dg = -2.0 * p.da1 / (p.a1 * p.a1 * p.a1);
  const double m = p.a1 * p.a2;
  const double dm = p.da1 * p.a2 + p.a1 * p.da2;

  OperatorPoint out;
  out.weight = m;
  out.dweight = dm;
  out.c2 = -0.5 * g;
  out.dc2 = -0.5 * dg;

  // Normal sector: transfer to chi through F^{-1/2}, then q -> 0.
  SecondOrder normal;
  if (formulation_ == Formulation::Laplacian) {
    normal = laplacian_normal(curv.h, curv.k);
  } else {
    normal = negated_square(momenta_.normal, w, 0.0);
  }
  out.geometric = -0.5 * conjugate_by_rescaling(normal, curv.h, curv.k).d0;

  double kinetic_c0 = 0.0;
  if (formulation_ == Formulation::Laplacian) {
    // -(1/2) (1/m) d/dw (m g d/dw)
    out.c1 = -0.5 * (dg + g * dm / m);
  } else {
    const DriftValue d = momenta_.surface.drift(w, 0.0);
    const double dd_plus_d2 = d.derivative + d.value * d.value;
    if (ordering_ == Ordering::Left) {
      // (1/2) g P^2 = -(1/2) g (D^2 + 2d D + d' + d^2)
      out.c1 = -g * d.value;
      kinetic_c0 = -0.5 * g * dd_plus_d2;
    } else {
      // (1/2) P g P = -(1/2) [g (D + d)^2 + g' (D + d)]
      out.c1 = -0.5 * (2.0 * g * d.value + dg);
      kinetic_c0 = -0.5 * (g * dd_plus_d2 + dg * d.value);
    }
  }

  const double azimuthal = 0.5 * static_cast<double>(nu_) * nu_ / (p.a2 * p.a2);
  out.c0 = kinetic_c0 + azimuthal + out.geometric;
  return out;
}

OperatorCoeffs surface_operator(const MetricPatch& patch, Formulation formulation, int nu,
                                Ordering ordering) {
  return OperatorCoeffs(patch, formulation, nu, ordering);
}

double self_adjointness_defect(const OperatorCoeffs& op, std::span<const double> grid) {
  double worst = 0.0;
  for (double w : grid) {
    const OperatorPoint p = op.at(w);
    const double lhs = p.dc2 * p.weight + p.c2 * p.dweight;
    worst = std::max(worst, std::fabs(lhs - p.c1 * p.weight));
  }
  return worst;
}

}  // namespace surfq
