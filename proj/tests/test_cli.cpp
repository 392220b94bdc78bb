#include <doctest.h>

#include "cavq/constants.hpp"
#include "cavq/entanglement.hpp"
#include "cavq/linalg.hpp"
#include "cli/circuit.hpp"
#include "cli/commands.hpp"
#include "cli/quantity.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

using namespace cavq;
using namespace cavq::cli;
namespace fs = std::filesystem;

namespace {

const fs::path kData{CAVQ_TEST_DATA};

struct Run {
  int code = -1;
  std::string out;
};

Run run_binary(const std::string& args) {
  const std::string cmd = std::string(CAVQ_BINARY) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path temp_path(const std::string& name) {
  return fs::temp_directory_path() / ("cavq_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST_CASE("quantities with units") {
  CHECK(parse_quantity("15cm", Dimension::Length) == doctest::Approx(0.15));
  CHECK(parse_quantity("980nm", Dimension::Length) == doctest::Approx(980e-9));
  CHECK(parse_quantity("30um", Dimension::Length) == doctest::Approx(30e-6));
  CHECK(parse_quantity("2.6us", Dimension::Time) == doctest::Approx(2.6e-6));
  CHECK(parse_quantity("1kHz", Dimension::Frequency) == doctest::Approx(1000.0));
  CHECK(parse_quantity("20W", Dimension::Power) == 20.0);
  CHECK(parse_quantity("0.15", Dimension::Length) == 0.15);
  CHECK(parse_quantity("1e-18", Dimension::None) == 1e-18);
  CHECK_THROWS_AS(parse_quantity("15kHz", Dimension::Length), std::invalid_argument);
  CHECK_THROWS_AS(parse_quantity("abc", Dimension::Length), std::invalid_argument);
  CHECK_THROWS_AS(parse_quantity("", Dimension::Length), std::invalid_argument);
}

TEST_CASE("angle expressions") {
  CHECK(parse_angle("pi/2") == doctest::Approx(kPi / 2.0));
  CHECK(parse_angle("-3*pi/4") == doctest::Approx(-0.75 * kPi));
  CHECK(parse_angle("2pi") == doctest::Approx(2.0 * kPi));
  CHECK(parse_angle("(pi+1)/2") == doctest::Approx((kPi + 1.0) / 2.0));
  CHECK(parse_angle("1.5e-3") == 1.5e-3);
  CHECK_THROWS_AS(parse_angle("pi/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_angle("(pi"), std::invalid_argument);
  CHECK_THROWS_AS(parse_angle("pie"), std::invalid_argument);
}

TEST_CASE("grids and integer lists") {
  const auto g = parse_grid("0:1e-3:5");
  REQUIRE(g.size() == 5);
  CHECK(g[0] == 0.0);
  CHECK(g[4] == doctest::Approx(1e-3));
  CHECK(g[2] == doctest::Approx(5e-4));
  CHECK(parse_grid("1e-4,pi/2").size() == 2);
  CHECK(parse_grid("7:7:1") == std::vector<double>{7.0});
  CHECK(parse_int_list("10,100,1000") == std::vector<long long>{10, 100, 1000});
  CHECK_THROWS_AS(parse_grid("0:1:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_int_list("10,-1"), std::invalid_argument);
}

TEST_CASE("circuit parsing and execution") {
  const CircuitProgram bell = parse_circuit_file(kData / "bell.cir");
  CHECK(bell.num_arms == 2);
  CHECK(bell.instructions.size() == 2);
  const RegisterState s = execute(bell);
  CHECK(s.probability(0b00) == doctest::Approx(0.5));
  CHECK(s.probability(0b11) == doctest::Approx(0.5));

  const RegisterState ea = execute(parse_circuit_file(kData / "ea_three.cir"));
  Eigen::MatrixXd m(3, 3);
  m << 0, kPi / 2, 0.3, kPi / 2, 0, 1.1, 0.3, 1.1, 0;
  RegisterState plus = RegisterState::zero(3);
  for (int a = 0; a < 3; ++a) plus = apply_single(plus, a, hadamard());
  CHECK(max_abs_diff(ea.amplitudes(), apply_ea(plus, PairwisePhaseMatrix(m)).amplitudes()) < 1e-12);
}

TEST_CASE("circuit errors carry line numbers") {
  try {
    parse_circuit_file(kData / "bad_gate.cir");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).rfind("line 4:", 0) == 0);
  }
  try {
    parse_circuit_file(kData / "bad_arm.cir");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  std::istringstream no_qubits("H 0\n");
  CHECK_THROWS_AS(parse_circuit(no_qubits, "."), ParseError);
  std::istringstream mismatch("QUBITS 2\nH 0\n");
  CHECK_THROWS_AS(parse_circuit(mismatch, ".", 3), ParseError);
  std::istringstream from_cli("H 2\n");
  CHECK(parse_circuit(from_cli, ".", 3).num_arms == 3);
  std::istringstream bad_angle("QUBITS 1\nRZ 0 pi//2\n");
  CHECK_THROWS_AS(parse_circuit(bad_angle, "."), ParseError);
  CHECK_THROWS_AS(parse_circuit_file(kData / "missing.cir"), std::ios_base::failure);
}

TEST_CASE("modes command") {
  ModesOptions o;
  o.length_m = 0.15;
  o.center_q = 300000;
  o.bandwidth_fsr = 5.0;
  std::ostringstream out, err;
  CHECK(run_modes(o, out, err) == kOk);
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "q,nu_hz,omega_rad_s");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 5);

  o.center_q.reset();
  o.center_hz = 1.5 * 999308193.3333;
  o.bandwidth_fsr = 0.5;
  std::ostringstream out2, err2;
  CHECK(run_modes(o, out2, err2) == kRuntimeError);
  CHECK(err2.str().find("no mode in band") != std::string::npos);
}

TEST_CASE("simulate command output") {
  SimulateOptions o;
  o.circuit_path = (kData / "bell.cir").string();
  std::ostringstream csv, err;
  CHECK(run_simulate(o, csv, err) == kOk);
  CHECK(csv.str().rfind("index,bits,re,im,probability\n", 0) == 0);
  CHECK(csv.str().find("arm,expect_z") != std::string::npos);

  o.format = Format::Json;
  std::ostringstream js;
  CHECK(run_simulate(o, js, err) == kOk);
  const auto j = nlohmann::json::parse(js.str());
  CHECK(j["num_arms"] == 2);
  CHECK(j["amplitudes"].size() == 4);
  CHECK(j["expect_z"].size() == 2);

  o.circuit_path = (kData / "bad_gate.cir").string();
  std::ostringstream e2;
  CHECK(run_simulate(o, js, e2) == kParseError);
  CHECK(e2.str().find("line 4") != std::string::npos);
  o.circuit_path = (kData / "missing.cir").string();
  CHECK(run_simulate(o, js, e2) == kIoError);
}

TEST_CASE("feasibility command") {
  FeasibilityOptions o;
  o.preset = "conservative";
  std::ostringstream out, err;
  CHECK(run_feasibility(o, out, err) == kOk);
  const auto j = nlohmann::json::parse(out.str());
  CHECK(j["regime"] == "conservative");
  CHECK(j["phi_tot"].get<double>() == doctest::Approx(1.178925504384).epsilon(1e-10));
  CHECK(j["feasible"] == false);
  CHECK(j["linewidth_budget"].size() == 3);
  CHECK(j["coherence"].is_null());
  CHECK(j["implied_length_ratio"].get<double>() == doctest::Approx(0.0678584013175).epsilon(1e-9));

  FeasibilityOptions zero;
  zero.n2 = 0.0;
  zero.w = 30e-6;
  zero.power = 20.0;
  zero.q_factor = 5e9;
  zero.format = Format::Csv;
  std::ostringstream zout, zerr;
  CHECK(run_feasibility(zero, zout, zerr) == kOk);

  FeasibilityOptions missing;
  missing.n2 = 1e-18;
  std::ostringstream mout, merr;
  CHECK(run_feasibility(missing, mout, merr) != kOk);

  FeasibilityOptions sweep;
  sweep.preset = "moderate";
  sweep.sweep = "power=10:40:4";
  sweep.format = Format::Csv;
  std::ostringstream sout, serr;
  CHECK(run_feasibility(sweep, sout, serr) == kOk);
  std::istringstream lines(sout.str());
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 5);
}

TEST_CASE("oracle-check command") {
  std::ostringstream out, err;
  CHECK(run_oracle_check({}, out, err) == kOk);
  CHECK(out.str().find("10/10 checks passed") != std::string::npos);
  OracleCheckOptions bad;
  bad.inject_sign_flip = true;
  std::ostringstream bout;
  CHECK(run_oracle_check(bad, bout, err) == kCheckFailed);
  CHECK(bout.str().find("FAIL") != std::string::npos);
}

TEST_CASE("binary: exit codes") {
  CHECK(run_binary("").code == kUsage);
  CHECK(run_binary("no-such-command").code == kUsage);
  CHECK(run_binary("modes --length 15cm --center-q 300000 --bandwidth-fsr 5").code == kOk);
  CHECK(run_binary("modes --length banana --center-q 3").code != kOk);
  CHECK(run_binary("simulate " + (kData / "bell.cir").string()).code == kOk);
  CHECK(run_binary("simulate " + (kData / "bad_gate.cir").string()).code == kParseError);
  CHECK(run_binary("simulate " + (kData / "missing.cir").string()).code == kIoError);
  CHECK(run_binary("oracle-check").code == kOk);
  CHECK(run_binary("oracle-check --inject-sign-flip").code == kCheckFailed);
  CHECK(run_binary("feasibility --preset conservative").code == kOk);
  CHECK(run_binary("feasibility --preset nonsense").code != kOk);
  CHECK(run_binary("noise-sweep --grid 1e-3 --trials 4 --reflections 200 --out /nonexistent/dir/x.csv")
            .code == kIoError);
}

TEST_CASE("binary: noise-sweep is byte-identical across runs and thread counts") {
  const std::string args = "noise-sweep --mode sigma --grid 0:1e-3:3 --trials 20 --reflections 600 --seed 5";
  const fs::path a = temp_path("a.csv");
  const fs::path b = temp_path("b.csv");
  REQUIRE(run_binary(args + " --threads 1 --out " + a.string()).code == kOk);
  REQUIRE(run_binary(args + " --threads 3 --out " + b.string()).code == kOk);
  const std::string first = slurp(a);
  CHECK(first.rfind("param,mean_fidelity,std_err,trials\n", 0) == 0);
  CHECK(first == slurp(b));
  const Run stdout_run = run_binary(args);
  CHECK(stdout_run.out == first);
  fs::remove(a);
  fs::remove(b);
}
