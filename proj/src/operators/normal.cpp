#include <cmath>

#include "surfq/jet.hpp"
#include "surfq/operators.hpp"

namespace surfq {

SecondOrder negated_square(const MomentumOp& p, double w, double q) {
  const DriftValue d = p.drift(w, q);
  return {1.0, 2.0 * d.value, d.derivative + d.value * d.value};
}

SecondOrder normal_kinetic_full(double h, double k, double q) {
  const double f = 1.0 + 2.0 * q * h + q * q * k;
  const double df = 2.0 * (h + q * k);
  const double hq = h + q * k;
  // h does not depend on q, so dh/dq drops out of the (1/F)(dh/dq + k) term.
  SecondOrder r;
  r.d2 = 1.0;
  r.d1 = 2.0 * hq / f;
  r.d0 = k / f - df * hq / (f * f) + hq * hq / (f * f);
  return r;
}

SecondOrder normal_kinetic_limit(double h, double k) { return {1.0, 2.0 * h, k - h * h}; }

SecondOrder laplacian_normal(double h, double k, double q) {
  const double f = 1.0 + 2.0 * q * h + q * q * k;
  return {1.0, 2.0 * (h + q * k) / f, 0.0};
}

SecondOrder conjugate_by_rescaling(const SecondOrder& op, double h, double k) {
  // F as a jet in q at q = 0, then F^{-1/2} with its first two derivatives.
  Jet2 f;
  f.d = {1.0, 2.0 * h, 2.0 * k};
  const Jet2 s = pow(f, -0.5);
  // op (chi s) = d2 (chi'' s + 2 chi' s' + chi s'') + d1 (chi' s + chi s') + d0 chi s
  SecondOrder r;
  r.d2 = op.d2 * s[0];
  r.d1 = 2.0 * op.d2 * s[1] + op.d1 * s[0];
  r.d0 = op.d2 * s[2] + op.d1 * s[1] + op.d0 * s[0];
  return r;
}

CancellationReport cancellation(double h, double k) {
  CancellationReport r;
  const SecondOrder herm = normal_kinetic_limit(h, k);
  r.hermitian_limit_d0 = herm.d0;
  r.laplacian_rescaled_d0 = conjugate_by_rescaling(laplacian_normal(h, k), h, k).d0;
  r.hermitian_rescaled_d0 = conjugate_by_rescaling(herm, h, k).d0;
  r.residual = std::fabs(r.hermitian_limit_d0 + r.laplacian_rescaled_d0);
  return r;
}

}  // namespace surfq
