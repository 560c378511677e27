#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "surfq/error.hpp"
#include "surfq/numeric.hpp"
#include "surfq/operators.hpp"

namespace surfq {

TestFunction test_function(const ShapeExpr& expr) {
  return [expr](double x) { return expr.jet1(x); };
}

namespace {

struct Line {
  Domain domain;
  std::function<double(double)> measure;
  std::function<DriftValue(double)> drift;
};

Line line_for(const MomentumOp& op, const MetricPatch& patch, const HermiticityOptions& opts) {
  if (op.coordinate == Coordinate::Phi) {
    const MetricPoint p = patch.at(opts.w0);
    const double m = p.a1 * p.a2;
    return {Domain{0.0, 2.0 * std::numbers::pi, BoundaryKind::Periodic},
            [m](double) { return m; },
            [&op, w0 = opts.w0](double phi) { return op.drift(w0, phi); }};
  }
  if (op.coordinate == Coordinate::Q) {
    const MetricPoint p = patch.at(opts.w0);
    double half = opts.q_half_width;
    if (half <= 0.0) {
      const double kmax = std::max(std::fabs(p.k1), std::fabs(p.k2));
      half = kmax > 0.0 ? 0.5 / kmax : 0.5;
    }
    return {Domain{-half, half, BoundaryKind::Open},
            [p](double q) { return p.a1 * p.a2 * curvature_sample(p, q).f; },
            [&op, w0 = opts.w0](double q) { return op.drift(w0, q); }};
  }
  if (op.coordinate != patch.coordinate()) {
    throw ParameterError("momentum coordinate does not match the patch coordinate");
  }
  return {patch.domain(),
          [&patch](double w) {
            const MetricPoint p = patch.at(w);
            return p.a1 * p.a2;
          },
          [&op](double w) { return op.drift(w, 0.0); }};
}

void check_boundary(const Line& line, const TestFunction& f, const TestFunction& g) {
  const double lo = line.domain.lo, hi = line.domain.hi;
  if (line.domain.kind == BoundaryKind::Periodic) {
    for (const TestFunction* fn : {&f, &g}) {
      const double a = (*fn)(lo).value(), b = (*fn)(hi).value();
      if (std::fabs(a - b) > 1e-10 * std::max(1.0, std::fabs(a))) {
        throw BoundaryError("test function is not periodic on the domain");
      }
    }
    return;
  }
  for (double x : {lo, hi}) {
    const double m = line.measure(x);
    const double boundary = f(x).value() * g(x).value() * m;
    if (std::fabs(boundary) > 1e-10 * std::max(1.0, std::fabs(m))) {
      throw BoundaryError("f g sqrt(g) does not vanish at the open boundary x = " +
                          std::to_string(x));
    }
  }
}

}  // namespace

double hermiticity_residual(const MomentumOp& op, const MetricPatch& patch, const TestFunction& f,
                            const TestFunction& g, const HermiticityOptions& opts) {
  const Line line = line_for(op, patch, opts);
  check_boundary(line, f, g);

  const std::size_t n = static_cast<std::size_t>(std::max(opts.points, 8));
  const QuadratureRule rule = line.domain.kind == BoundaryKind::Periodic
                                  ? periodic_trapezoid(n, line.domain.lo, line.domain.length())
                                  : gauss_legendre(n, line.domain.lo, line.domain.hi);

  // For real f, g: <f, P g> - <P f, g> = -i * integral of
  // (f g' + f' g + 2 drift f g) sqrt(g).
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double x = rule.nodes[j];
    const Jet1 fx = f(x), gx = g(x);
    const double d = line.drift(x).value;
    sum += rule.weights[j] * (fx[0] * gx[1] + fx[1] * gx[0] + 2.0 * d * fx[0] * gx[0]) *
           line.measure(x);
  }
  return std::fabs(sum);
}

std::vector<TestFunction> trig_basis(int degree) {
  std::vector<TestFunction> out;
  out.push_back([](double) { return Jet1::constant(1.0); });
  for (int n = 1; n <= degree; ++n) {
    out.push_back([n](double x) { return cos(static_cast<double>(n) * Jet1::variable(x)); });
    out.push_back([n](double x) { return sin(static_cast<double>(n) * Jet1::variable(x)); });
  }
  return out;
}

std::vector<TestFunction> dirichlet_sine_basis(int degree, double lo, double hi) {
  std::vector<TestFunction> out;
  for (int n = 1; n <= degree; ++n) {
    const double scale = n * std::numbers::pi / (hi - lo);
    out.push_back([scale, lo](double x) { return sin(scale * (Jet1::variable(x) - lo)); });
  }
  return out;
}

HermiticitySurvey survey_torus_hermiticity(double R, double a, int degree, double w0) {
  const MetricPatch patch = torus_metric_patch(R, a);
  const HermitianMomenta p = hermitian_momenta(patch);
  const MomentumOp naive = naive_momentum(Coordinate::Theta);
  const auto basis = trig_basis(degree);

  HermiticityOptions opts;
  opts.w0 = w0;
  // Inside the focal distance 1/max|k_i| at theta = w0.
  const MetricPoint pt = patch.at(w0);
  opts.q_half_width = 0.5 / std::max(std::fabs(pt.k1), std::fabs(pt.k2));
  const auto normal_basis = dirichlet_sine_basis(degree, -opts.q_half_width, opts.q_half_width);

  HermiticitySurvey s;
  for (const auto& f : basis) {
    for (const auto& g : basis) {
      s.surface = std::max(s.surface, hermiticity_residual(p.surface, patch, f, g, opts));
      s.phi = std::max(s.phi, hermiticity_residual(p.phi, patch, f, g, opts));
      s.naive_surface = std::max(s.naive_surface, hermiticity_residual(naive, patch, f, g, opts));
    }
  }
  for (const auto& f : normal_basis) {
    for (const auto& g : normal_basis) {
      s.normal = std::max(s.normal, hermiticity_residual(p.normal, patch, f, g, opts));
    }
  }
  return s;
}

}  // namespace surfq
