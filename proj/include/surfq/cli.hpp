#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "surfq/geometry.hpp"
#include "surfq/torus_spectrum.hpp"

namespace surfq::cli {

enum class OutputFormat { Json, Csv, Table };

// Malformed command line; run() maps it to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Accepts decimals ("0.5", "-1e-3") and fractions ("1/3"). A fraction is
/// evaluated as one correctly rounded division. Throws UsageError.
double parse_real(std::string_view text);

// Fixed-point with `precision` decimals; never prints "-0.000".
std::string format_fixed(double value, int precision);

// Rounds to `precision` decimals for JSON output.
double round_to(double value, int precision);

std::string emit_spectrum(const SpectrumResult& result, OutputFormat format, int precision,
                          int states);

std::string emit_curvature(std::span<const CurvatureSample> samples, OutputFormat format,
                           int precision);

struct Comparison {
  double alpha = 0.0;
  std::vector<TableRow> laplacian;
  std::vector<TableRow> hermitian;
};

Comparison compare_formulations(double alpha, int states, int n_max, int n_quad);

std::string emit_comparison(const Comparison& cmp, OutputFormat format, int precision);

std::string emit_magic(int nu, OutputFormat format, int precision);

// Human-readable psi(theta) keeping terms within a factor 10 of the largest.
std::string describe_wavefunction(const TableRow& row, int precision);

/// Dispatches curvature | spectrum | compare | magic | check. args[0] is the
/// program name. Returns 0 on success, 1 on domain or parameter errors, 2 on
/// usage errors. Data goes to `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace surfq::cli
