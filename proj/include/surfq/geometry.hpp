#pragma once

#include <functional>
#include <optional>
#include <string_view>

#include "surfq/shape.hpp"

namespace surfq {

// Label of the coordinate a one-dimensional object is parameterized by.
enum class Coordinate { Rho, Theta, Phi, Q };

std::string_view coordinate_name(Coordinate c);

enum class BoundaryKind { Periodic, Open };

struct Domain {
  double lo = 0.0;
  double hi = 0.0;
  BoundaryKind kind = BoundaryKind::Open;

  double length() const { return hi - lo; }
  bool contains(double w) const;
};

/// Metric data of a surface of revolution at one value of the meridian
/// coordinate w. Near the surface
///
///     dx^2 = a1^2 (1 + q k1)^2 dw^2 + a2^2 (1 + q k2)^2 dphi^2 + dq^2.
struct MetricPoint {
  double w = 0.0;
  double a1 = 0.0, da1 = 0.0, d2a1 = 0.0;
  double a2 = 0.0, da2 = 0.0, d2a2 = 0.0;
  double k1 = 0.0, dk1 = 0.0;
  double k2 = 0.0, dk2 = 0.0;
  std::optional<double> z;  // sqrt(1 + S'^2), graphs only
};

class MetricPatch {
 public:
  using Evaluator = std::function<MetricPoint(double)>;

  MetricPatch(Coordinate coordinate, Domain domain, Evaluator eval);

  Coordinate coordinate() const { return coordinate_; }
  const Domain& domain() const { return domain_; }

  // Throws ParameterError when w is outside an open domain.
  MetricPoint at(double w) const;

 private:
  Coordinate coordinate_;
  Domain domain_;
  Evaluator eval_;
};

/// Patch for the graph rho -> (rho, S(rho)) rotated about the z axis:
/// a1 = Z = sqrt(1 + S'^2), a2 = rho, k1 = -S''/Z^3, k2 = -S'/(rho Z).
/// On the axis (rho = 0, only allowed when S'(0) = 0) k2 takes its limit
/// -S''(0)/Z(0). Throws AxisSingularityError if the axis is in the domain
/// and S'(0) != 0.
MetricPatch graph_metric_patch(const ShapeExpr& shape, Domain domain);

/// Torus of major radius R and minor radius a, meridian angle theta:
/// a1 = a, k1 = 1/a, a2 = R + a cos(theta), k2 = cos(theta)/(R + a cos(theta)).
MetricPatch torus_metric_patch(double major_radius, double minor_radius);

struct CurvatureSample {
  double w = 0.0;
  std::optional<double> z;
  double k1 = 0.0;
  double k2 = 0.0;
  double h = 0.0;   // mean curvature (k1 + k2)/2
  double k = 0.0;   // Gaussian curvature k1 k2
  double vc = 0.0;  // geometric potential -(h^2 - k)/2, hbar = m = 1
  double f = 1.0;   // shell factor 1 + 2qh + q^2 k at offset q
};

CurvatureSample curvature_sample(const MetricPoint& p, double q = 0.0);

/// Throws FocalSurfaceError if 1 + q k1 <= 0 or 1 + q k2 <= 0.
CurvatureSample curvature_sample(const MetricPatch& patch, double w, double q = 0.0);

}  // namespace surfq
