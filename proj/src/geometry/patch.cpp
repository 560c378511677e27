#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "surfq/error.hpp"
#include "surfq/geometry.hpp"

namespace surfq {

namespace {

constexpr double kAxisSlopeTolerance = 1e-12;

MetricPoint graph_point(const ShapeExpr& shape, double rho) {
  const Jet3 s = shape.jet3(rho);
  const Jet2 slope = s.derivative();      // (S', S'', S''')
  const Jet2 z = sqrt(1.0 + square(slope));  // (Z, Z', Z'')
  const Jet1 z1 = z.truncate<1>();
  const Jet1 curv = slope.derivative();   // (S'', S''')

  MetricPoint p;
  p.w = rho;
  p.z = z[0];
  p.a1 = z[0];
  p.da1 = z[1];
  p.d2a1 = z[2];
  p.a2 = rho;
  p.da2 = 1.0;
  p.d2a2 = 0.0;

  const Jet1 k1 = -curv / (z1 * z1 * z1);
  p.k1 = k1[0];
  p.dk1 = k1[1];

  if (rho == 0.0) {
    // S'/rho -> S''(0) + S'''(0) rho/2 and Z = 1 + O(rho^2) near the axis.
    p.k2 = -s[2] / z[0];
    p.dk2 = -0.5 * s[3];
  } else {
    const Jet1 k2 = -slope.truncate<1>() / (Jet1::variable(rho) * z1);
    p.k2 = k2[0];
    p.dk2 = k2[1];
  }
  return p;
}

}  // namespace

std::string_view coordinate_name(Coordinate c) {
  switch (c) {
    case Coordinate::Rho: return "rho";
    case Coordinate::Theta: return "theta";
    case Coordinate::Phi: return "phi";
    case Coordinate::Q: return "q";
  }
  return "?";
}

bool Domain::contains(double w) const {
  if (kind == BoundaryKind::Periodic) return std::isfinite(w);
  const double slack = 1e-12 * std::max(1.0, std::fabs(hi - lo));
  return w >= lo - slack && w <= hi + slack;
}

MetricPatch::MetricPatch(Coordinate coordinate, Domain domain, Evaluator eval)
    : coordinate_(coordinate), domain_(domain), eval_(std::move(eval)) {}

MetricPoint MetricPatch::at(double w) const {
  if (!domain_.contains(w)) {
    throw ParameterError(std::string(coordinate_name(coordinate_)) + " = " + std::to_string(w) +
                         " lies outside the patch domain [" + std::to_string(domain_.lo) + ", " +
                         std::to_string(domain_.hi) + "]");
  }
  return eval_(w);
}

MetricPatch graph_metric_patch(const ShapeExpr& shape, Domain domain) {
  if (!(domain.lo < domain.hi) || !std::isfinite(domain.lo) || !std::isfinite(domain.hi)) {
    throw ParameterError("graph domain must be a finite interval with lo < hi");
  }
  if (domain.lo < 0.0) throw ParameterError("graph domain must satisfy rho >= 0");
  domain.kind = BoundaryKind::Open;
  if (domain.lo == 0.0) {
    const double slope = shape.jet1(0.0)[1];
    if (std::fabs(slope) > kAxisSlopeTolerance) {
      throw AxisSingularityError("rho = 0 is in the domain but S'(0) = " + std::to_string(slope) +
                                 " != 0; the surface has a conical point on the axis");
    }
  }
  return MetricPatch(Coordinate::Rho, domain,
                     [shape](double rho) { return graph_point(shape, rho); });
}

MetricPatch torus_metric_patch(double R, double a) {
  if (!(a > 0.0) || !(a < R) || !std::isfinite(R)) {
    throw ParameterError("torus radii must satisfy 0 < a < R (self-intersecting otherwise)");
  }
  const Domain domain{0.0, 2.0 * std::numbers::pi, BoundaryKind::Periodic};
  return MetricPatch(Coordinate::Theta, domain, [R, a](double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    MetricPoint p;
    p.w = theta;
    p.a1 = a;
    p.a2 = R + a * c;
    p.da2 = -a * s;
    p.d2a2 = -a * c;
    p.k1 = 1.0 / a;
    p.k2 = c / p.a2;
    // d/dtheta [cos/(R + a cos)] = -R sin/(R + a cos)^2
    p.dk2 = -R * s / (p.a2 * p.a2);
    return p;
  });
}

}  // namespace surfq
