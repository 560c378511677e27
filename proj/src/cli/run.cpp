#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "surfq/cli.hpp"
#include "surfq/error.hpp"
#include "surfq/operators.hpp"
#include "surfq/shape.hpp"

namespace surfq::cli {

namespace {

constexpr const char* kSynopsis =
    "usage: surfq <curvature|spectrum|compare|magic|check> [options]\n"
    "       surfq <subcommand> --help\n";

struct Common {
  std::string format;
  std::string output;
  int precision = 4;
};

void add_common(CLI::App* sub, Common& c, const std::string& default_format) {
  c.format = default_format;
  sub->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  sub->add_option("--output,-o", c.output, "write to this file instead of standard output");
  sub->add_option("--precision", c.precision, "decimals in printed numbers")
      ->check(CLI::Range(0, 16))
      ->capture_default_str();
}

OutputFormat format_of(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  return OutputFormat::Table;
}

Formulation formulation_of(const std::string& s) {
  if (s == "laplacian") return Formulation::Laplacian;
  if (s == "hermitian") return Formulation::Hermitian;
  throw UsageError("unknown formulation '" + s + "'");
}

// Quadrature nodes for a given n_max unless the user chose them.
int quad_nodes(int n_max, const std::optional<int>& n_quad) {
  if (n_quad) return *n_quad;
  return std::max(128, 4 * n_max + 8);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

void write(const std::string& text, const Common& c, std::ostream& out) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + c.output + "'");
  f << text;
}

std::vector<double> grid(double lo, double hi, int points) {
  std::vector<double> g;
  if (points == 1) {
    g.push_back(lo);
    return g;
  }
  for (int i = 0; i < points; ++i) g.push_back(lo + (hi - lo) * i / (points - 1));
  return g;
}

// Midpoints of `points` equal cells; stays clear of axis and boundary.
std::vector<double> interior_grid(double lo, double hi, int points) {
  std::vector<double> g;
  for (int i = 0; i < points; ++i) g.push_back(lo + (hi - lo) * (i + 0.5) / points);
  return g;
}

struct CurvatureArgs {
  Common common;
  std::string shape, shape_file, from, to, q = "0";
  bool torus = false;
  std::string major = "3", minor = "1";
  int points = 21;
};

std::string do_curvature(const CurvatureArgs& a) {
  const double q = parse_real(a.q);
  std::optional<MetricPatch> patch;
  double lo = 0.0, hi = 0.0;
  if (a.torus) {
    if (!a.shape.empty() || !a.shape_file.empty()) {
      throw UsageError("--torus cannot be combined with --shape or --shape-file");
    }
    patch = torus_metric_patch(parse_real(a.major), parse_real(a.minor));
    lo = a.from.empty() ? 0.0 : parse_real(a.from);
    hi = a.to.empty() ? 2.0 * std::numbers::pi : parse_real(a.to);
  } else {
    if (a.shape.empty() == a.shape_file.empty()) {
      throw UsageError("give exactly one of --shape, --shape-file or --torus");
    }
    const ShapeExpr expr = parse_shape(a.shape.empty() ? read_file(a.shape_file) : a.shape);
    lo = a.from.empty() ? 0.0 : parse_real(a.from);
    hi = a.to.empty() ? 1.0 : parse_real(a.to);
    if (!(hi > lo)) throw UsageError("--to must exceed --from");
    patch = graph_metric_patch(expr, Domain{lo, hi, BoundaryKind::Open});
  }
  std::vector<CurvatureSample> samples;
  for (double w : grid(lo, hi, a.points)) samples.push_back(curvature_sample(*patch, w, q));
  return emit_curvature(samples, format_of(a.common.format), a.common.precision);
}

struct SpectrumArgs {
  Common common;
  std::string alpha, formulation = "laplacian";
  int nu = 0, n_max = 24, states = 5;
  std::optional<int> n_quad;
};

std::string do_spectrum(const SpectrumArgs& a) {
  TorusProblem p;
  p.alpha = parse_real(a.alpha);
  p.nu = a.nu;
  p.formulation = formulation_of(a.formulation);
  p.n_max = a.n_max;
  p.n_quad = quad_nodes(a.n_max, a.n_quad);
  return emit_spectrum(solve_spectrum(p), format_of(a.common.format), a.common.precision, a.states);
}

struct CompareArgs {
  Common common;
  std::string alpha;
  int n_max = 24, states = 3;
  std::optional<int> n_quad;
};

std::string do_compare(const CompareArgs& a) {
  const Comparison cmp =
      compare_formulations(parse_real(a.alpha), a.states, a.n_max, quad_nodes(a.n_max, a.n_quad));
  return emit_comparison(cmp, format_of(a.common.format), a.common.precision);
}

struct MagicArgs {
  Common common;
  int nu = 1;
};

struct CheckArgs {
  Common common;
  std::string shape = "0.5*rho^2 - 0.1*rho^4";
  std::string from = "0", to = "1.5", major = "3", minor = "1";
  int points = 64, degree = 6;
};

std::string do_check(const CheckArgs& a) {
  using ordered_json = nlohmann::ordered_json;
  const ShapeExpr expr = parse_shape(a.shape);
  const double lo = parse_real(a.from), hi = parse_real(a.to);
  if (!(hi > lo)) throw UsageError("--to must exceed --from");
  const MetricPatch patch = graph_metric_patch(expr, Domain{lo, hi, BoundaryKind::Open});
  const std::vector<double> g = interior_grid(lo, hi, a.points);

  // Residuals are printed unrounded; --precision does not apply.
  double identity = 0.0, rescaled = 0.0, limit = 0.0;
  const HermitianMomenta momenta = hermitian_momenta(patch);
  for (double w : g) {
    const CurvatureSample s = curvature_sample(patch, w);
    const CancellationReport r = cancellation(s.h, s.k);
    identity = std::max(identity, r.residual);
    rescaled = std::max(rescaled, std::fabs(r.hermitian_rescaled_d0));
    const SecondOrder pq = negated_square(momenta.normal, w, 0.0);
    limit = std::max(limit, std::fabs(pq.d0 - (s.k - s.h * s.h)));
  }

  ordered_json self_adjoint;
  self_adjoint["laplacian"] =
      self_adjointness_defect(surface_operator(patch, Formulation::Laplacian, 1), g);
  self_adjoint["hermitian_left"] = self_adjointness_defect(
      surface_operator(patch, Formulation::Hermitian, 1, Ordering::Left), g);
  self_adjoint["hermitian_sandwich"] = self_adjointness_defect(
      surface_operator(patch, Formulation::Hermitian, 1, Ordering::Sandwich), g);

  const double major = parse_real(a.major), minor = parse_real(a.minor);
  const HermiticitySurvey survey = survey_torus_hermiticity(major, minor, a.degree);

  ordered_json j;
  j["shape"] = print_shape(expr);
  j["domain"] = {lo, hi};
  j["points"] = a.points;
  j["cancellation"] = {{"normal_limit_defect", limit},
                       {"identity_residual", identity},
                       {"hermitian_rescaled_d0", rescaled}};
  j["self_adjointness"] = self_adjoint;
  j["torus_hermiticity"] = {{"R", major},
                            {"a", minor},
                            {"degree", a.degree},
                            {"P_theta", survey.surface},
                            {"P_phi", survey.phi},
                            {"P_q", survey.normal},
                            {"naive_P_theta", survey.naive_surface}};
  return j.dump(2) + "\n";
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Particle on a curved surface of revolution: curvature, operators, torus spectra",
               "surfq"};
  app.require_subcommand(1, 1);
  app.set_config("--config", "", "read options from a TOML/INI file; command-line flags win");

  CurvatureArgs cv;
  CLI::App* curvature = app.add_subcommand("curvature", "curvature data on a grid of w");
  add_common(curvature, cv.common, "csv");
  curvature->add_option("--shape", cv.shape, "profile S(rho) of the graph surface");
  curvature->add_option("--shape-file", cv.shape_file, "file holding the profile expression");
  curvature->add_flag("--torus", cv.torus, "sample a torus instead of a graph");
  curvature->add_option("--R", cv.major, "torus major radius")->capture_default_str();
  curvature->add_option("--a", cv.minor, "torus minor radius")->capture_default_str();
  curvature->add_option("--from", cv.from, "first grid point (default 0)");
  curvature->add_option("--to", cv.to, "last grid point (default 1, or 2 pi for a torus)");
  curvature->add_option("--points", cv.points, "grid size")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  curvature->add_option("--q", cv.q, "normal offset for F")->capture_default_str();

  SpectrumArgs sp;
  CLI::App* spectrum = app.add_subcommand("spectrum", "torus eigenvalues and eigenvectors");
  add_common(spectrum, sp.common, "json");
  spectrum->add_option("--alpha", sp.alpha, "aspect ratio a/R in (0,1)")->required();
  spectrum->add_option("--nu", sp.nu, "azimuthal quantum number |nu|")->capture_default_str();
  spectrum->add_option("--formulation", sp.formulation)
      ->check(CLI::IsMember({"laplacian", "hermitian"}))
      ->capture_default_str();
  spectrum->add_option("--nmax", sp.n_max, "highest Fourier harmonic")->capture_default_str();
  spectrum->add_option("--nquad", sp.n_quad, "quadrature nodes (default max(128, 4 nmax + 8))");
  spectrum->add_option("--states", sp.states, "number of states to print")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  CompareArgs cp;
  CLI::App* compare = app.add_subcommand("compare", "lowest states of both formulations");
  add_common(compare, cp.common, "table");
  compare->add_option("--alpha", cp.alpha, "aspect ratio a/R in (0,1)")->required();
  compare->add_option("--states", cp.states, "states per formulation")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  compare->add_option("--nmax", cp.n_max, "highest Fourier harmonic")->capture_default_str();
  compare->add_option("--nquad", cp.n_quad, "quadrature nodes (default max(128, 4 nmax + 8))");

  MagicArgs mg;
  CLI::App* magic = app.add_subcommand("magic", "aspect ratios where the azimuthal term cancels");
  add_common(magic, mg.common, "json");
  magic->add_option("--nu", mg.nu, "azimuthal quantum number, at least 1")->required();

  CheckArgs ck;
  CLI::App* check = app.add_subcommand("check", "cancellation and hermiticity residuals (JSON)");
  check->add_option("--shape", ck.shape, "profile S(rho) for the cancellation checks")
      ->capture_default_str();
  check->add_option("--from", ck.from)->capture_default_str();
  check->add_option("--to", ck.to)->capture_default_str();
  check->add_option("--points", ck.points)->check(CLI::Range(1, 100000))->capture_default_str();
  check->add_option("--R", ck.major, "torus major radius")->capture_default_str();
  check->add_option("--a", ck.minor, "torus minor radius")->capture_default_str();
  check->add_option("--degree", ck.degree, "highest trig harmonic in the test basis")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  check->add_option("--output,-o", ck.common.output, "write to this file");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("surfq");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "surfq: " << e.what() << "\n" << kSynopsis;
    return 2;
  }

  try {
    if (curvature->parsed()) {
      write(do_curvature(cv), cv.common, out);
    } else if (spectrum->parsed()) {
      write(do_spectrum(sp), sp.common, out);
    } else if (compare->parsed()) {
      write(do_compare(cp), cp.common, out);
    } else if (magic->parsed()) {
      write(emit_magic(mg.nu, format_of(mg.common.format), mg.common.precision), mg.common, out);
    } else if (check->parsed()) {
      write(do_check(ck), ck.common, out);
    }
  } catch (const UsageError& e) {
    err << "surfq: " << e.what() << "\n" << kSynopsis;
    return 2;
  } catch (const Error& e) {
    err << "surfq: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace surfq::cli
