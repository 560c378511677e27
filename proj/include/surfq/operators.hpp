#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "surfq/geometry.hpp"
#include "surfq/jet.hpp"

namespace surfq {

enum class Formulation { Laplacian, Hermitian };
enum class Ordering { Left, Sandwich };

std::string_view formulation_name(Formulation f);
std::string_view ordering_name(Ordering o);

struct DriftValue {
  double value = 0.0;
  double derivative = 0.0;  // along the momentum's own coordinate
};

/// P = -i (d/dx + drift), with drift = (1/2) d/dx ln sqrt(g). The drift is a
/// function of the surface coordinate w and the normal offset q; surface
/// momenta ignore q (their derivatives pass over it).
struct MomentumOp {
  Coordinate coordinate;
  std::function<DriftValue(double w, double q)> drift;
};

struct HermitianMomenta {
  MomentumOp surface;  // P_w
  MomentumOp phi;      // P_phi
  MomentumOp normal;   // P_q
};

HermitianMomenta hermitian_momenta(const MetricPatch& patch);

// The same coordinate derivative with no drift: -i d/dx.
MomentumOp naive_momentum(Coordinate coordinate);

/// Coefficients of d2 * D^2 + d1 * D + d0 for a one-dimensional operator.
struct SecondOrder {
  double d2 = 0.0;
  double d1 = 0.0;
  double d0 = 0.0;
};

// -P^2 = (D + drift)^2 = D^2 + 2 drift D + drift' + drift^2.
SecondOrder negated_square(const MomentumOp& p, double w, double q);

/// Full-q expansion of -P_q^2 with drift (h + q k)/F.
SecondOrder normal_kinetic_full(double h, double k, double q);

/// q -> 0 limit of -P_q^2: (1, 2h, k - h^2).
SecondOrder normal_kinetic_limit(double h, double k);

/// Normal part of the Laplacian, D^2 + (F'/F) D, at offset q.
SecondOrder laplacian_normal(double h, double k, double q = 0.0);

/// Transfers an operator acting on Psi = chi F^{-1/2} to one acting on chi,
/// taking q -> 0 after differentiation. The Laplacian normal part becomes
/// D^2 + (h^2 - k); the Hermitian one becomes D^2.
SecondOrder conjugate_by_rescaling(const SecondOrder& op, double h, double k);

struct CancellationReport {
  double hermitian_limit_d0 = 0.0;  // d0 of -P_q^2 at q -> 0, expected k - h^2
  double laplacian_rescaled_d0 = 0.0;  // d0 left by F^{-1/2} in the Laplacian route
  double hermitian_rescaled_d0 = 0.0;  // same, Hermitian route; expected 0
  // |hermitian_limit_d0 + laplacian_rescaled_d0|
  double residual = 0.0;
};

CancellationReport cancellation(double h, double k);

/// Coefficients of c2 D^2 + c1 D + c0 at one point, with the measure
/// weight = a1 a2 under which the Laplacian form is self-adjoint. dc2 and
/// dweight are exact derivatives; geometric is the part of c0 contributed
/// by the normal sector after q -> 0 (V_C for the Laplacian route).
struct OperatorPoint {
  double c2 = 0.0, c1 = 0.0, c0 = 0.0;
  double weight = 0.0;
  double dc2 = 0.0, dweight = 0.0;
  double geometric = 0.0;
};

/// Azimuthally reduced surface Hamiltonian (factor e^{i nu phi}) acting on
/// psi(w), hbar = m = 1.
class OperatorCoeffs {
 public:
  OperatorCoeffs(MetricPatch patch, Formulation formulation, int nu, Ordering ordering);

  OperatorPoint at(double w) const;

  const MetricPatch& patch() const { return patch_; }
  Formulation formulation() const { return formulation_; }
  Ordering ordering() const { return ordering_; }
  int nu() const { return nu_; }

 private:
  MetricPatch patch_;
  HermitianMomenta momenta_;
  Formulation formulation_;
  int nu_;
  Ordering ordering_;
};

/// `ordering` only matters for the Hermitian formulation: Left puts 1/a1^2
/// to the left of P_w^2, Sandwich uses P_w (1/a1^2) P_w.
OperatorCoeffs surface_operator(const MetricPatch& patch, Formulation formulation, int nu,
                                Ordering ordering = Ordering::Sandwich);

/// max over the grid of |(c2 weight)' - c1 weight|; zero for a
/// Sturm-Liouville (self-adjoint) operator.
double self_adjointness_defect(const OperatorCoeffs& op, std::span<const double> grid);

// Real test function with its first derivative.
using TestFunction = std::function<Jet1(double)>;

TestFunction test_function(const ShapeExpr& expr);

struct HermiticityOptions {
  double w0 = 0.0;           // surface point for the phi and q directions
  double q_half_width = 0.0; // q in [-h, h]; 0 picks half the focal distance
  int points = 256;
};

/// |<f, P g> - <P f, g>| with the inner product weighted by sqrt(g):
/// a1 a2 dw for P_w, a1 a2 dphi for P_phi, a1 a2 F(q) dq for P_q.
/// Throws BoundaryError unless f and g are periodic (periodic domains) or
/// f g sqrt(g) vanishes at the endpoints (open domains).
double hermiticity_residual(const MomentumOp& op, const MetricPatch& patch, const TestFunction& f,
                            const TestFunction& g, const HermiticityOptions& opts = {});

/// {1, cos n x, sin n x : 1 <= n <= degree} on a period of 2 pi.
std::vector<TestFunction> trig_basis(int degree);

/// {sin(n pi (x - lo)/(hi - lo)) : 1 <= n <= degree}, vanishing at both ends.
std::vector<TestFunction> dirichlet_sine_basis(int degree, double lo, double hi);

struct HermiticitySurvey {
  double surface = 0.0;  // max residual of P_theta over all basis pairs
  double phi = 0.0;
  double normal = 0.0;
  double naive_surface = 0.0;  // max residual of -i d/dtheta (no drift)
};

/// Residuals of the Hermitian momenta on a torus over trigonometric test
/// pairs up to `degree`; P_phi and P_q are probed at theta = w0.
HermiticitySurvey survey_torus_hermiticity(double major_radius, double minor_radius, int degree,
                                           double w0 = 0.3);

}  // namespace surfq
