#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "surfq/cli.hpp"

using namespace surfq;
using namespace surfq::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "surfq");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::string read(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("number parsing and formatting") {
  CHECK(parse_real("1/3") == 1.0 / 3.0);
  CHECK(parse_real("2/3") == 2.0 / 3.0);
  CHECK(parse_real("0.5") == 0.5);
  CHECK(parse_real("+2") == 2.0);
  CHECK(parse_real("-1e-3") == -1e-3);
  CHECK_THROWS_AS(parse_real("abc"), UsageError);
  CHECK_THROWS_AS(parse_real("1/0"), UsageError);
  CHECK_THROWS_AS(parse_real("1/"), UsageError);
  CHECK_THROWS_AS(parse_real(""), UsageError);
  CHECK_THROWS_AS(parse_real("inf"), UsageError);
  CHECK(format_fixed(-0.00001, 4) == "0.0000");
  CHECK(format_fixed(-0.2834, 4) == "-0.2834");
  CHECK(format_fixed(1.0 / 3.0, 2) == "0.33");
  CHECK(round_to(0.44721359, 4) == 0.4472);
  CHECK(std::signbit(round_to(-1e-9, 4)) == false);
}

TEST_CASE("magic") {
  const Outcome r = invoke({"magic", "--nu", "1"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["laplacian"] == 0.5);
  CHECK(j["hermitian"] == 0.4472);
  CHECK(invoke({"magic", "--nu", "2", "--format", "csv"}).out == "nu,laplacian,hermitian\n2,0.2500,0.2425\n");
  CHECK(invoke({"magic", "--nu", "0"}).code == 1);
}

TEST_CASE("exit codes") {
  const Outcome bad = invoke({"spectrum", "--alpha", "2"});
  CHECK(bad.code == 1);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("alpha must lie in (0,1)") != std::string::npos);

  CHECK(invoke({}).code == 2);
  CHECK(invoke({"nonsense"}).code == 2);
  const Outcome unknown = invoke({"spectrum", "--alpha", "0.5", "--bogus", "1"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("usage: surfq") != std::string::npos);
  CHECK(invoke({"spectrum"}).code == 2);
  CHECK(invoke({"spectrum", "--alpha", "x"}).code == 2);
  CHECK(invoke({"spectrum", "--alpha", "0.5", "--format", "xml"}).code == 2);
  CHECK(invoke({"magic", "spectrum", "--nu", "1"}).code == 2);
  CHECK(invoke({"curvature"}).code == 2);
  CHECK(invoke({"curvature", "--shape", "rho +"}).code == 1);
  CHECK(invoke({"curvature", "--shape", "0.5*rho", "--from", "0"}).code == 1);

  const Outcome help = invoke({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("spectrum") != std::string::npos);
  const Outcome sub = invoke({"spectrum", "--help"});
  CHECK(sub.code == 0);
  CHECK(sub.out.find("--formulation") != std::string::npos);
}

TEST_CASE("spectrum JSON parses back to the solver values") {
  const Outcome r = invoke({"spectrum", "--alpha", "1/3", "--nu", "1", "--formulation", "hermitian",
                            "--states", "3", "--precision", "8"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  TorusProblem p;
  p.alpha = 1.0 / 3.0;
  p.nu = 1;
  p.formulation = Formulation::Hermitian;
  const SpectrumResult ref = solve_spectrum(p);
  CHECK(j["nu"] == 1);
  CHECK(j["formulation"] == "hermitian");
  CHECK(j["n_max"] == 24);
  REQUIRE(j["states"].size() == 3);
  for (int i = 0; i < 3; ++i) {
    const auto& s = j["states"][i];
    CHECK(std::fabs(s["beta"].get<double>() - ref.entries[i].beta) <= 5e-9);
    CHECK(s["parity"] == std::string(parity_name(ref.entries[i].parity)));
    REQUIRE(s["coeffs"].size() == 25);
    for (int n = 0; n < 25; ++n) {
      CHECK(std::fabs(s["coeffs"][n].get<double>() - ref.entries[i].coeffs[n]) <= 5e-9);
    }
  }
  // Key order is fixed.
  CHECK(r.out.find("\"alpha\"") < r.out.find("\"nu\""));
  CHECK(r.out.find("\"beta\"") < r.out.find("\"parity\""));
}

TEST_CASE("spectrum CSV") {
  const Outcome r = invoke({"spectrum", "--alpha", "0.5", "--format", "csv", "--nmax", "4", "--states", "2"});
  REQUIRE(r.code == 0);
  const auto lines = split(r.out, '\n');
  CHECK(lines[0] == "beta,parity,c0,c1,c2,c3,c4");
  REQUIRE(lines.size() == 4);
  for (int i = 1; i <= 2; ++i) {
    const auto cells = split(lines[i], ',');
    CHECK(cells.size() == 7);
    CHECK(std::isfinite(parse_real(cells[0])));
  }
  CHECK(lines[3].empty());
}

TEST_CASE("curvature output") {
  const Outcome r = invoke({"curvature", "--torus", "--R", "3", "--a", "1", "--points", "5"});
  REQUIRE(r.code == 0);
  const auto lines = split(r.out, '\n');
  CHECK(lines[0] == "w,Z,k1,k2,h,k,V_C,F");
  CHECK(lines[1] == "0.0000,,1.0000,0.2500,0.6250,0.2500,-0.0703,1.0000");

  const Outcome g = invoke({"curvature", "--shape", "sqrt(4 - rho^2)", "--to", "1.5", "--points", "4",
                            "--format", "json", "--q", "0.1"});
  REQUIRE(g.code == 0);
  const auto j = nlohmann::json::parse(g.out);
  REQUIRE(j.size() == 4);
  for (const auto& row : j) {
    CHECK(row["V_C"] == 0.0);
    CHECK(row["k1"] == 0.5);
    CHECK(row["F"] == 1.1025);
  }
  CHECK(j[0]["Z"] == 1.0);

  CHECK(invoke({"curvature", "--torus", "--q", "-1"}).code == 1);
  CHECK(invoke({"curvature", "--torus", "--shape", "rho"}).code == 2);
}

TEST_CASE("shape file and output file") {
  const auto dir = std::filesystem::temp_directory_path() / "surfq_cli_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "shape.txt") << "0.5*rho^2\n";
  }
  const auto out = dir / "out.csv";
  const Outcome r = invoke({"curvature", "--shape-file", (dir / "shape.txt").string(), "--points", "3",
                            "--output", out.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  const Outcome direct = invoke({"curvature", "--shape", "0.5*rho^2", "--points", "3"});
  CHECK(read(out) == direct.out);
  CHECK(invoke({"curvature", "--shape-file", (dir / "missing.txt").string()}).code == 2);
}

TEST_CASE("config file, flags win") {
  const auto dir = std::filesystem::temp_directory_path() / "surfq_cli_test";
  std::filesystem::create_directories(dir);
  const auto cfg = dir / "run.toml";
  {
    std::ofstream(cfg) << "[spectrum]\nalpha = \"1/3\"\nnu = 2\nstates = 1\n";
  }
  const Outcome a = invoke({"--config", cfg.string(), "spectrum"});
  REQUIRE(a.code == 0);
  const auto ja = nlohmann::json::parse(a.out);
  CHECK(ja["nu"] == 2);
  CHECK(ja["alpha"] == 0.3333);
  CHECK(ja["states"].size() == 1);
  const Outcome b = invoke({"--config", cfg.string(), "spectrum", "--nu", "1"});
  REQUIRE(b.code == 0);
  CHECK(nlohmann::json::parse(b.out)["nu"] == 1);
}

TEST_CASE("determinism") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"compare", "--alpha", "1/2"},
        std::vector<std::string>{"spectrum", "--alpha", "0.37", "--nu", "3", "--format", "csv"},
        std::vector<std::string>{"check"}}) {
    const Outcome a = invoke(args), b = invoke(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("compare matches the golden fixtures") {
  const std::filesystem::path dir = SURFQ_GOLDEN_DIR;
  const std::pair<const char*, const char*> cases[] = {
      {"1/3", "compare_1_3.txt"}, {"1/2", "compare_1_2.txt"}, {"2/3", "compare_2_3.txt"}};
  for (const auto& [alpha, file] : cases) {
    const Outcome r = invoke({"compare", "--alpha", alpha});
    REQUIRE(r.code == 0);
    INFO(file);
    CHECK(r.out == read(dir / file));
  }
}

TEST_CASE("compare CSV and JSON") {
  const Outcome c = invoke({"compare", "--alpha", "1/2", "--format", "csv", "--nmax", "2"});
  REQUIRE(c.code == 0);
  const auto lines = split(c.out, '\n');
  CHECK(lines[0] == "formulation,nu,parity,beta,c0,c1,c2");
  CHECK(lines[2].rfind("laplacian,1,even,0.0000,0.3989,", 0) == 0);

  const Outcome j = invoke({"compare", "--alpha", "2/3", "--format", "json"});
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["hermitian"][2]["parity"] == "odd");
  CHECK(doc["hermitian"][2]["beta"] == 1.0);
  CHECK(doc["laplacian"].size() == 3);
}

TEST_CASE("check reports residuals") {
  const Outcome r = invoke({"check", "--shape", "sqrt(4 - rho^2)", "--to", "1.8"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["cancellation"]["identity_residual"].get<double>() <= 1e-12);
  CHECK(j["cancellation"]["hermitian_rescaled_d0"].get<double>() <= 1e-12);
  CHECK(j["self_adjointness"]["laplacian"].get<double>() <= 1e-10);
  CHECK(j["torus_hermiticity"]["P_theta"].get<double>() <= 1e-10);
  CHECK(j["torus_hermiticity"]["naive_P_theta"].get<double>() >= 0.1);
}

TEST_CASE("wavefunction description") {
  TableRow row;
  row.nu = 2;
  row.state.parity = Parity::Even;
  row.state.coeffs = {0.3884, 0.0534, 0.001};
  CHECK(describe_wavefunction(row, 4) == "[0.3884 + 0.0534 cos(theta)] exp(+-2i phi)");
  row.nu = 0;
  row.state.parity = Parity::Odd;
  row.state.coeffs = {0.0, 0.5927, -0.1110};
  CHECK(describe_wavefunction(row, 4) == "0.5927 sin(theta) - 0.1110 sin(2 theta)");
}
