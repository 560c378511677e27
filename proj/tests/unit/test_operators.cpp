#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "surfq/error.hpp"
#include "surfq/operators.hpp"

using namespace surfq;

namespace {

MetricPatch graph(const char* src, double lo, double hi) {
  return graph_metric_patch(parse_shape(src), Domain{lo, hi, BoundaryKind::Open});
}

std::vector<double> interior(double lo, double hi, int n) {
  std::vector<double> g;
  for (int i = 0; i < n; ++i) g.push_back(lo + (hi - lo) * (i + 0.5) / n);
  return g;
}

TestFunction trig(double c0, double c1, double s1, double c2, double s2) {
  return [=](double x) {
    const Jet1 t = Jet1::variable(x);
    return c0 + c1 * cos(t) + s1 * sin(t) + c2 * cos(2.0 * t) + s2 * sin(2.0 * t);
  };
}

}  // namespace

TEST_CASE("drift examples") {
  const double R = 3.0, a = 1.0;
  const HermitianMomenta t = hermitian_momenta(torus_metric_patch(R, a));
  for (double th : {0.0, 0.4, 2.0, 4.5}) {
    CHECK(t.surface.drift(th, 0.0).value ==
          doctest::Approx(-a * std::sin(th) / (2 * (R + a * std::cos(th)))).epsilon(1e-14));
    CHECK(t.phi.drift(th, 0.0).value == 0.0);
  }

  const HermitianMomenta plane = hermitian_momenta(graph("1", 0.1, 2.0));
  for (double r : {0.1, 0.5, 1.7}) {
    CHECK(plane.surface.drift(r, 0.0).value == doctest::Approx(1.0 / (2 * r)).epsilon(1e-15));
    CHECK(plane.surface.drift(r, 0.0).derivative ==
          doctest::Approx(-1.0 / (2 * r * r)).epsilon(1e-15));
  }

  const MetricPatch p = graph("0.5*rho^2 - 0.1*rho^4", 0.0, 1.5);
  const HermitianMomenta m = hermitian_momenta(p);
  for (double r : {0.0, 0.3, 1.2}) {
    CHECK(m.normal.drift(r, 0.0).value == doctest::Approx(curvature_sample(p, r).h).epsilon(1e-15));
  }
  CHECK(naive_momentum(Coordinate::Theta).drift(0.7, 0.0).value == 0.0);
}

TEST_CASE("surface drift derivative matches its finite difference") {
  const MetricPatch p = graph("0.5*rho^2 - 0.1*rho^4 + 0.2*sin(3*rho)", 0.1, 1.5);
  const HermitianMomenta m = hermitian_momenta(p);
  const double h = 1e-6;
  for (double r : {0.2, 0.6, 1.3}) {
    const double fd = (m.surface.drift(r + h, 0).value - m.surface.drift(r - h, 0).value) / (2 * h);
    CHECK(m.surface.drift(r, 0).derivative == doctest::Approx(fd).epsilon(1e-7));
    const double fdq = (m.normal.drift(r, h).value - m.normal.drift(r, -h).value) / (2 * h);
    CHECK(m.normal.drift(r, 0).derivative == doctest::Approx(fdq).epsilon(1e-7));
  }
}

TEST_CASE("normal kinetic limit examples") {
  const SecondOrder a = normal_kinetic_limit(0.5, 0.0);
  CHECK(a.d2 == 1.0);
  CHECK(a.d1 == 1.0);
  CHECK(a.d0 == -0.25);
  const SecondOrder b = normal_kinetic_limit(0.0, 0.0);
  CHECK(b.d1 == 0.0);
  CHECK(b.d0 == 0.0);
  // The full expansion reduces to the limit at q = 0.
  const SecondOrder c = normal_kinetic_full(0.3, -0.2, 0.0);
  const SecondOrder d = normal_kinetic_limit(0.3, -0.2);
  CHECK(c.d1 == doctest::Approx(d.d1));
  CHECK(c.d0 == doctest::Approx(d.d0));
}

TEST_CASE("property: cancellation for random curvatures") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 1000; ++i) {
    const double k1 = u(rng), k2 = u(rng);
    const double h = 0.5 * (k1 + k2), k = k1 * k2;
    const CancellationReport r = cancellation(h, k);
    CHECK(std::fabs(r.hermitian_limit_d0 - (k - h * h)) <= 1e-12);
    CHECK(std::fabs(r.laplacian_rescaled_d0 - (h * h - k)) <= 1e-12);
    CHECK(std::fabs(r.hermitian_rescaled_d0) <= 1e-12);
    CHECK(r.residual <= 1e-12);
    // The rescaling also removes the first-order term.
    CHECK(std::fabs(conjugate_by_rescaling(laplacian_normal(h, k), h, k).d1) <= 1e-12);
  }
}

TEST_CASE("hermitian surface operator carries no geometric potential") {
  const MetricPatch p = graph("0.5*rho^2 - 0.1*rho^4", 0.0, 1.5);
  for (Ordering o : {Ordering::Left, Ordering::Sandwich}) {
    const OperatorCoeffs op = surface_operator(p, Formulation::Hermitian, 2, o);
    for (double r : interior(0.0, 1.5, 30)) CHECK(std::fabs(op.at(r).geometric) <= 1e-12);
  }
  const OperatorCoeffs lap = surface_operator(p, Formulation::Laplacian, 2);
  for (double r : interior(0.0, 1.5, 30)) {
    CHECK(std::fabs(lap.at(r).geometric - curvature_sample(p, r).vc) <= 1e-12);
  }
}

TEST_CASE("property: laplacian and sandwich operators are self-adjoint") {
  const char* shapes[] = {"0.5*rho^2 - 0.1*rho^4", "sqrt(4 - rho^2)", "0.3*rho + sin(rho)",
                          "exp(-rho^2)", "cosh(rho)"};
  for (const char* s : shapes) {
    const MetricPatch p = graph(s, 0.1, 1.5);
    const auto g = interior(0.1, 1.5, 400);
    CHECK(self_adjointness_defect(surface_operator(p, Formulation::Laplacian, 1), g) <= 1e-10);
    CHECK(self_adjointness_defect(surface_operator(p, Formulation::Hermitian, 1, Ordering::Sandwich),
                                  g) <= 1e-10);
  }
  // Left ordering is not symmetric once a1 varies.
  const MetricPatch p = graph("0.5*rho^2", 0.1, 1.5);
  CHECK(self_adjointness_defect(surface_operator(p, Formulation::Hermitian, 1, Ordering::Left),
                                interior(0.1, 1.5, 50)) > 1e-3);
}

TEST_CASE("graph laplacian has the expected structure") {
  // S = rho^2/2: Z = sqrt(1 + rho^2), Z' = rho/Z.
  const MetricPatch p = graph("0.5*rho^2", 0.0, 2.0);
  const OperatorCoeffs op = surface_operator(p, Formulation::Laplacian, 0);
  for (double r : interior(0.0, 2.0, 20)) {
    const double z = std::sqrt(1 + r * r), dz = r / z;
    const OperatorPoint c = op.at(r);
    CHECK(c.c2 == doctest::Approx(-0.5 / (z * z)).epsilon(1e-14));
    CHECK(c.c1 == doctest::Approx(-0.5 * (1 / (z * z * r) - dz / (z * z * z))).epsilon(1e-13));
  }
  CHECK_THROWS_AS(op.at(0.0), DomainError);
}

TEST_CASE("torus operator coefficients, scaled by 2 a^2") {
  const double R = 3.0, a = 1.5, alpha = a / R;
  const MetricPatch t = torus_metric_patch(R, a);
  for (int nu : {0, 1, 2}) {
    const OperatorCoeffs lap = surface_operator(t, Formulation::Laplacian, nu);
    const OperatorCoeffs left = surface_operator(t, Formulation::Hermitian, nu, Ordering::Left);
    const OperatorCoeffs sand = surface_operator(t, Formulation::Hermitian, nu, Ordering::Sandwich);
    for (int i = 0; i < 40; ++i) {
      const double th = 2 * std::numbers::pi * i / 40;
      const double u = 1 + alpha * std::cos(th), s = 2 * a * a;
      const OperatorPoint l = lap.at(th), hl = left.at(th), hs = sand.at(th);
      CHECK(l.c2 * s == doctest::Approx(-1.0));
      CHECK(std::fabs(l.c1 * s - alpha * std::sin(th) / u) <= 1e-12);
      CHECK(std::fabs(l.c0 * s - (nu * nu * alpha * alpha - 0.25) / (u * u)) <= 1e-12);
      const double w_h = (nu * nu * alpha * alpha + 0.25 * (alpha * alpha - 1)) / (u * u) + 0.25;
      CHECK(std::fabs(hl.c1 * s - alpha * std::sin(th) / u) <= 1e-12);
      CHECK(std::fabs(hl.c0 * s - w_h) <= 1e-12);
      // a1 is constant on the torus, so the two orderings coincide.
      CHECK(std::fabs(hl.c2 - hs.c2) <= 1e-12);
      CHECK(std::fabs(hl.c1 - hs.c1) <= 1e-12);
      CHECK(std::fabs(hl.c0 - hs.c0) <= 1e-12);
    }
  }
}

TEST_CASE("thin torus hermitian operator approaches the free ring") {
  const double a = 1e-3, R = 1e3;
  const OperatorCoeffs op = surface_operator(torus_metric_patch(R, a), Formulation::Hermitian, 0);
  for (double th : {0.0, 1.0, 2.5}) {
    const OperatorPoint p = op.at(th);
    CHECK(p.c2 * 2 * a * a == doctest::Approx(-1.0));
    CHECK(std::fabs(p.c1 * 2 * a * a) <= 1e-5);
    CHECK(std::fabs(p.c0 * 2 * a * a) <= 1e-5);
  }
}

TEST_CASE("hermiticity residuals on the torus") {
  const MetricPatch t = torus_metric_patch(3.0, 1.0);
  const HermitianMomenta p = hermitian_momenta(t);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> c(-1.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const TestFunction f = trig(c(rng), c(rng), c(rng), c(rng), c(rng));
    const TestFunction g = trig(c(rng), c(rng), c(rng), c(rng), c(rng));
    CHECK(hermiticity_residual(p.surface, t, f, g) <= 1e-10);
    CHECK(hermiticity_residual(p.phi, t, f, g, {.w0 = 1.3}) <= 1e-10);
  }
  // Without the drift: |integral of cos(theta) a (R + a cos(theta))| = pi a^2.
  const TestFunction one = trig(1, 0, 0, 0, 0), sine = trig(0, 0, 1, 0, 0);
  const MomentumOp naive = naive_momentum(Coordinate::Theta);
  CHECK(hermiticity_residual(naive, t, one, sine) == doctest::Approx(std::numbers::pi).epsilon(1e-12));
  // f = 1, g = cos(theta) sees no defect: the integrand is odd.
  CHECK(hermiticity_residual(naive, t, one, trig(0, 1, 0, 0, 0)) <= 1e-12);
}

TEST_CASE("survey over a trig basis") {
  const HermiticitySurvey s = survey_torus_hermiticity(3.0, 1.0, 6);
  CHECK(s.surface <= 1e-10);
  CHECK(s.phi <= 1e-10);
  CHECK(s.normal <= 1e-10);
  CHECK(s.naive_surface >= 0.1);
  CHECK(trig_basis(3).size() == 7);
}

TEST_CASE("P_q is hermitian under the shell measure") {
  const MetricPatch p = graph("0.5*rho^2 - 0.1*rho^4", 0.0, 1.5);
  const HermitianMomenta m = hermitian_momenta(p);
  HermiticityOptions opts{.w0 = 0.8, .q_half_width = 0.3};
  const auto basis = dirichlet_sine_basis(4, -0.3, 0.3);
  for (const auto& f : basis) {
    for (const auto& g : basis) CHECK(hermiticity_residual(m.normal, p, f, g, opts) <= 1e-10);
  }
  // P_rho on an open patch with compactly vanishing products.
  const TestFunction bump = [](double x) {
    const Jet1 r = Jet1::variable(x);
    return square(r - 0.1) * square(r - 1.5);
  };
  const MetricPatch q = graph("0.5*rho^2 - 0.1*rho^4", 0.1, 1.5);
  CHECK(hermiticity_residual(hermitian_momenta(q).surface, q, bump, bump) <= 1e-10);
}

TEST_CASE("boundary conditions are enforced") {
  const MetricPatch t = torus_metric_patch(3.0, 1.0);
  const TestFunction ramp = [](double x) { return Jet1::variable(x); };
  const TestFunction one = trig(1, 0, 0, 0, 0);
  CHECK_THROWS_AS(hermiticity_residual(hermitian_momenta(t).surface, t, ramp, one), BoundaryError);
  const MetricPatch g = graph("rho^2", 0.1, 1.0);
  CHECK_THROWS_AS(hermiticity_residual(hermitian_momenta(g).surface, g, one, one), BoundaryError);
  CHECK_THROWS_AS(hermiticity_residual(naive_momentum(Coordinate::Rho), t, one, one), ParameterError);
}
