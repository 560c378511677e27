#include "surfq/operators.hpp"

namespace surfq {

std::string_view formulation_name(Formulation f) {
  return f == Formulation::Laplacian ? "laplacian" : "hermitian";
}

std::string_view ordering_name(Ordering o) { return o == Ordering::Left ? "left" : "sandwich"; }

HermitianMomenta hermitian_momenta(const MetricPatch& patch) {
  HermitianMomenta m;

  // sqrt(g) at q = 0 is a1 a2, so the drift is (1/2)(a1'/a1 + a2'/a2).
  m.surface.coordinate = patch.coordinate();
  m.surface.drift = [patch](double w, double) {
    const MetricPoint p = patch.at(w);
    const double r1 = p.da1 / p.a1, r2 = p.da2 / p.a2;
    DriftValue d;
    d.value = 0.5 * (r1 + r2);
    d.derivative = 0.5 * (p.d2a1 / p.a1 - r1 * r1 + p.d2a2 / p.a2 - r2 * r2);
    return d;
  };

  m.phi = naive_momentum(Coordinate::Phi);

  // sqrt(g) carries F = 1 + 2qh + q^2 k; drift (h + qk)/F.
  m.normal.coordinate = Coordinate::Q;
  m.normal.drift = [patch](double w, double q) {
    const CurvatureSample c = curvature_sample(patch, w, q);
    const double num = c.h + q * c.k;
    DriftValue d;
    d.value = num / c.f;
    d.derivative = c.k / c.f - 2.0 * num * num / (c.f * c.f);
    return d;
  };
  return m;
}

MomentumOp naive_momentum(Coordinate coordinate) {
  return MomentumOp{coordinate, [](double, double) { return DriftValue{}; }};
}

}  // namespace surfq
