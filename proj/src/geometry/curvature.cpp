#include <string>

#include "surfq/error.hpp"
#include "surfq/geometry.hpp"

namespace surfq {

CurvatureSample curvature_sample(const MetricPoint& p, double q) {
  if (!(1.0 + q * p.k1 > 0.0) || !(1.0 + q * p.k2 > 0.0)) {
    throw FocalSurfaceError("offset q = " + std::to_string(q) +
                            " reaches a focal surface (1 + q k_i <= 0) at w = " + std::to_string(p.w));
  }
  CurvatureSample c;
  c.w = p.w;
  c.z = p.z;
  c.k1 = p.k1;
  c.k2 = p.k2;
  c.h = 0.5 * (p.k1 + p.k2);
  c.k = p.k1 * p.k2;
  // h^2 - k == ((k1 - k2)/2)^2; the squared form keeps vc <= 0 and exactly
  // zero at umbilics.
  const double half_gap = 0.5 * (p.k1 - p.k2);
  c.vc = -0.5 * half_gap * half_gap;
  c.f = 1.0 + 2.0 * q * c.h + q * q * c.k;
  return c;
}

CurvatureSample curvature_sample(const MetricPatch& patch, double w, double q) {
  return curvature_sample(patch.at(w), q);
}

}  // namespace surfq
