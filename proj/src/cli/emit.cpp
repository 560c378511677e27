#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "json.hpp"
#include "surfq/cli.hpp"

namespace surfq::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string harmonic_label(Parity parity, int n) {
  if (n == 0) return "";
  const std::string arg = n == 1 ? "theta" : std::to_string(n) + " theta";
  return std::string(parity == Parity::Even ? " cos(" : " sin(") + arg + ")";
}

std::string optional_fixed(const std::optional<double>& v, int precision) {
  return v ? format_fixed(*v, precision) : std::string();
}

ordered_json state_json(const SpectrumEntry& e, int precision) {
  ordered_json coeffs = ordered_json::array();
  for (double c : e.coeffs) coeffs.push_back(round_to(c, precision));
  return ordered_json{{"beta", round_to(e.beta, precision)},
                      {"parity", std::string(parity_name(e.parity))},
                      {"coeffs", coeffs}};
}

std::string coeff_header(std::size_t n) {
  std::string h;
  for (std::size_t i = 0; i < n; ++i) h += ",c" + std::to_string(i);
  return h;
}

std::string coeff_cells(const SpectrumEntry& e, int precision) {
  std::string s;
  for (double c : e.coeffs) s += "," + format_fixed(c, precision);
  return s;
}

}  // namespace

std::string describe_wavefunction(const TableRow& row, int precision) {
  const auto& c = row.state.coeffs;
  double largest = 0.0;
  for (double v : c) largest = std::max(largest, std::fabs(v));

  std::string body;
  int terms = 0;
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (std::fabs(c[n]) < 0.1 * largest || std::fabs(c[n]) == 0.0) continue;
    const std::string mag = format_fixed(std::fabs(c[n]), precision);
    if (terms == 0) {
      body += (c[n] < 0.0 ? "-" : "") + mag;
    } else {
      body += (c[n] < 0.0 ? " - " : " + ") + mag;
    }
    body += harmonic_label(row.state.parity, static_cast<int>(n));
    ++terms;
  }
  if (row.nu == 0) return body;
  const std::string phase =
      row.nu == 1 ? "exp(+-i phi)" : "exp(+-" + std::to_string(row.nu) + "i phi)";
  return (terms > 1 ? "[" + body + "]" : body) + " " + phase;
}

std::string emit_spectrum(const SpectrumResult& result, OutputFormat format, int precision,
                          int states) {
  const std::size_t count =
      std::min(result.entries.size(), static_cast<std::size_t>(std::max(states, 0)));
  const auto& p = result.problem;
  if (format == OutputFormat::Json) {
    ordered_json list = ordered_json::array();
    for (std::size_t i = 0; i < count; ++i) list.push_back(state_json(result.entries[i], precision));
    ordered_json j{{"alpha", round_to(p.alpha, precision)},
                   {"nu", p.nu},
                   {"formulation", std::string(formulation_name(p.formulation))},
                   {"n_max", p.n_max},
                   {"states", list}};
    return dump(j);
  }
  std::ostringstream os;
  if (format == OutputFormat::Csv) {
    os << "beta,parity" << coeff_header(static_cast<std::size_t>(p.n_max) + 1) << "\n";
    for (std::size_t i = 0; i < count; ++i) {
      const auto& e = result.entries[i];
      os << format_fixed(e.beta, precision) << "," << parity_name(e.parity)
         << coeff_cells(e, precision) << "\n";
    }
    return os.str();
  }
  os << "# alpha = " << format_fixed(p.alpha, precision) << ", nu = " << p.nu << ", "
     << formulation_name(p.formulation) << "\n";
  char line[128];
  std::snprintf(line, sizeof line, "%6s  %-6s  %10s  %s\n", "state", "parity", "beta",
                "wavefunction");
  os << line;
  for (std::size_t i = 0; i < count; ++i) {
    const auto& e = result.entries[i];
    std::snprintf(line, sizeof line, "%6zu  %-6s  %10s  ", i, std::string(parity_name(e.parity)).c_str(),
                  format_fixed(e.beta, precision).c_str());
    os << line << describe_wavefunction(TableRow{p.nu, e}, precision) << "\n";
  }
  return os.str();
}

std::string emit_curvature(std::span<const CurvatureSample> samples, OutputFormat format,
                           int precision) {
  if (format == OutputFormat::Json) {
    ordered_json list = ordered_json::array();
    for (const auto& s : samples) {
      ordered_json row;
      row["w"] = round_to(s.w, precision);
      row["Z"] = s.z ? ordered_json(round_to(*s.z, precision)) : ordered_json(nullptr);
      row["k1"] = round_to(s.k1, precision);
      row["k2"] = round_to(s.k2, precision);
      row["h"] = round_to(s.h, precision);
      row["k"] = round_to(s.k, precision);
      row["V_C"] = round_to(s.vc, precision);
      row["F"] = round_to(s.f, precision);
      list.push_back(row);
    }
    return dump(list);
  }
  std::ostringstream os;
  if (format == OutputFormat::Csv) {
    os << "w,Z,k1,k2,h,k,V_C,F\n";
    for (const auto& s : samples) {
      os << format_fixed(s.w, precision) << "," << optional_fixed(s.z, precision) << ","
         << format_fixed(s.k1, precision) << "," << format_fixed(s.k2, precision) << ","
         << format_fixed(s.h, precision) << "," << format_fixed(s.k, precision) << ","
         << format_fixed(s.vc, precision) << "," << format_fixed(s.f, precision) << "\n";
    }
    return os.str();
  }
  const int width = precision + 6;
  char line[256];
  std::snprintf(line, sizeof line, "%*s %*s %*s %*s %*s %*s %*s %*s\n", width, "w", width, "Z",
                width, "k1", width, "k2", width, "h", width, "k", width, "V_C", width, "F");
  os << line;
  for (const auto& s : samples) {
    const std::string z = s.z ? format_fixed(*s.z, precision) : "-";
    std::snprintf(line, sizeof line, "%*s %*s %*s %*s %*s %*s %*s %*s\n", width,
                  format_fixed(s.w, precision).c_str(), width, z.c_str(), width,
                  format_fixed(s.k1, precision).c_str(), width,
                  format_fixed(s.k2, precision).c_str(), width,
                  format_fixed(s.h, precision).c_str(), width,
                  format_fixed(s.k, precision).c_str(), width,
                  format_fixed(s.vc, precision).c_str(), width,
                  format_fixed(s.f, precision).c_str());
    os << line;
  }
  return os.str();
}

Comparison compare_formulations(double alpha, int states, int n_max, int n_quad) {
  Comparison cmp;
  cmp.alpha = alpha;
  cmp.laplacian = lowest_states(alpha, Formulation::Laplacian, states, n_max, n_quad);
  cmp.hermitian = lowest_states(alpha, Formulation::Hermitian, states, n_max, n_quad);
  return cmp;
}

std::string emit_comparison(const Comparison& cmp, OutputFormat format, int precision) {
  if (format == OutputFormat::Json) {
    ordered_json j;
    j["alpha"] = round_to(cmp.alpha, precision);
    for (const auto* group : {&cmp.laplacian, &cmp.hermitian}) {
      ordered_json list = ordered_json::array();
      for (const auto& r : *group) {
        ordered_json s = state_json(r.state, precision);
        s["nu"] = r.nu;
        list.push_back(s);
      }
      j[group == &cmp.laplacian ? "laplacian" : "hermitian"] = list;
    }
    return dump(j);
  }
  std::ostringstream os;
  if (format == OutputFormat::Csv) {
    const std::size_t n = cmp.laplacian.empty() ? 0 : cmp.laplacian.front().state.coeffs.size();
    os << "formulation,nu,parity,beta" << coeff_header(n) << "\n";
    for (const auto* group : {&cmp.laplacian, &cmp.hermitian}) {
      const char* name = group == &cmp.laplacian ? "laplacian" : "hermitian";
      for (const auto& r : *group) {
        os << name << "," << r.nu << "," << parity_name(r.state.parity) << ","
           << format_fixed(r.state.beta, precision) << coeff_cells(r.state, precision) << "\n";
      }
    }
    return os.str();
  }
  os << "# alpha = " << format_fixed(cmp.alpha, precision) << "\n";
  char line[128];
  std::snprintf(line, sizeof line, "%-11s  %2s  %-6s  %10s  %s\n", "formulation", "nu", "parity",
                "beta", "wavefunction");
  os << line;
  for (const auto* group : {&cmp.laplacian, &cmp.hermitian}) {
    const char* name = group == &cmp.laplacian ? "laplacian" : "hermitian";
    for (const auto& r : *group) {
      std::snprintf(line, sizeof line, "%-11s  %2d  %-6s  %10s  ", name, r.nu,
                    std::string(parity_name(r.state.parity)).c_str(),
                    format_fixed(r.state.beta, precision).c_str());
      os << line << describe_wavefunction(r, precision) << "\n";
    }
  }
  return os.str();
}

std::string emit_magic(int nu, OutputFormat format, int precision) {
  const double lap = magic_alpha(nu, Formulation::Laplacian);
  const double her = magic_alpha(nu, Formulation::Hermitian);
  if (format == OutputFormat::Json) {
    return dump(ordered_json{{"laplacian", round_to(lap, precision)},
                             {"hermitian", round_to(her, precision)}});
  }
  std::ostringstream os;
  if (format == OutputFormat::Csv) {
    os << "nu,laplacian,hermitian\n"
       << nu << "," << format_fixed(lap, precision) << "," << format_fixed(her, precision) << "\n";
    return os.str();
  }
  os << "nu = " << nu << "\n"
     << "laplacian  alpha = 1/(2 nu)             = " << format_fixed(lap, precision) << "\n"
     << "hermitian  alpha = 1/sqrt(1 + 4 nu^2)   = " << format_fixed(her, precision) << "\n";
  return os.str();
}

}  // namespace surfq::cli
