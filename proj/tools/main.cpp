#include "cli/commands.hpp"
#include "cli/quantity.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

using namespace cavq;
using namespace cavq::cli;

namespace {

std::optional<double> quantity(const std::string& text, Dimension dim) {
  if (text.empty()) return std::nullopt;
  return parse_quantity(text, dim);
}

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + text + "'");
}

SweepKind parse_sweep_kind(const std::string& text) {
  if (text == "sigma" || text == "sigma-sweep") return SweepKind::Sigma;
  if (text == "reflections" || text == "reflection-sweep") return SweepKind::Reflections;
  throw std::invalid_argument("unknown sweep mode '" + text + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cavq: cavity-enhanced polarization-qubit simulator and feasibility toolkit"};
  app.require_subcommand(1);

  // modes
  std::string modes_length, modes_center, modes_bandwidth = "0";
  std::optional<long long> modes_center_q;
  std::optional<double> modes_bandwidth_fsr;
  int modes_arm = 0;
  auto* modes = app.add_subcommand("modes", "List the longitudinal modes of a harmonic bundle");
  modes->add_option("--length", modes_length, "Cavity length (e.g. 15cm)")->required();
  modes->add_option("--center", modes_center, "Band center frequency (e.g. 299.79THz)");
  modes->add_option("--center-q", modes_center_q, "Center the band on mode q");
  modes->add_option("--bandwidth", modes_bandwidth, "Full bandwidth (e.g. 5GHz)");
  modes->add_option("--bandwidth-fsr", modes_bandwidth_fsr, "Full bandwidth in units of the FSR");
  modes->add_option("--arm", modes_arm, "Arm id of the bundle");

  // simulate
  SimulateOptions sim;
  std::string sim_format = "csv";
  auto* simulate = app.add_subcommand("simulate", "Run a circuit file on the polarization register");
  simulate->add_option("circuit", sim.circuit_path, "Circuit file")->required();
  simulate->add_option("--qubits,-M", sim.num_arms, "Number of arms (alternative to QUBITS)");
  simulate->add_option("--format", sim_format, "csv or json");

  // noise-sweep
  NoiseSweepOptions ns;
  std::string ns_mode = "sigma", ns_grid, ns_phi = "pi/2", ns_sigma = "4e-4";
  std::optional<std::string> ns_out;
  auto* sweep = app.add_subcommand("noise-sweep", "Monte Carlo fidelity of the accumulated HPH gate");
  sweep->add_option("--mode", ns_mode, "sigma-sweep or reflection-sweep");
  sweep->add_option("--grid", ns_grid, "start:stop:count or comma list")->required();
  sweep->add_option("--phi", ns_phi, "HPH phase (pi-expressions allowed)");
  sweep->add_option("--reflections", ns.sweep.reflections, "Transits per stage for a sigma sweep");
  sweep->add_option("--sigma", ns_sigma, "Noise std deviation for a reflection sweep");
  sweep->add_option("--passes", ns.sweep.passes_per_round_trip, "Element passes per round trip");
  sweep->add_option("--trials", ns.sweep.noise.trials, "Trials per grid point");
  sweep->add_option("--seed", ns.sweep.noise.seed, "RNG seed");
  sweep->add_option("--threads", ns.sweep.threads, "Worker threads (0 = all cores)");
  sweep->add_flag("--perturb-all", ns.sweep.noise.perturb_all, "Perturb inactive angles too");
  sweep->add_option("--out", ns_out, "Output CSV path (default stdout)");

  // feasibility
  FeasibilityOptions fe;
  std::string fe_lambda = "980nm", fe_lcav = "0.15m", fe_lnl = "0.01m";
  std::string fe_n2, fe_w, fe_power, fe_q, fe_ops = "10,100,1000", fe_linewidth, fe_target;
  std::string fe_format = "json";
  auto* feas = app.add_subcommand("feasibility", "Accumulated cross-Kerr phase and linewidth budget");
  feas->add_option("--preset", fe.preset, "conservative, moderate or aggressive");
  feas->add_option("--lambda", fe_lambda, "Wavelength");
  feas->add_option("--l-cav", fe_lcav, "Cavity length");
  feas->add_option("--l-nl", fe_lnl, "Nonlinear interaction length");
  feas->add_option("--n2", fe_n2, "Nonlinear index (m^2/W)");
  feas->add_option("--w", fe_w, "Beam waist");
  feas->add_option("--power", fe_power, "CW power");
  feas->add_option("--q", fe_q, "Cavity quality factor");
  feas->add_option("--ops", fe_ops, "Gate counts for the linewidth budget");
  feas->add_option("--linewidth", fe_linewidth, "Laser linewidth for the coherence check");
  feas->add_option("--margin", fe.report.coherence_margin, "Required tau_coh / tau");
  feas->add_option("--target-phase", fe_target, "Phase for the implied L_nl/L_cav ratio");
  feas->add_option("--sweep", fe.sweep, "field=start:stop:count");
  feas->add_option("--format", fe_format, "json or csv");
  feas->add_option("--out", fe.out_path, "Output path (default stdout)");

  // oracle-check
  OracleCheckOptions oc;
  auto* oracle = app.add_subcommand("oracle-check", "Fock-space equivalence checks");
  oracle->add_option("--n-max", oc.n_max, "Photon-number truncation per mode");
  oracle->add_flag("--inject-sign-flip", oc.inject_sign_flip, "Test hook: flip the Kerr sign")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*modes) {
      ModesOptions o;
      o.length_m = parse_quantity(modes_length, Dimension::Length);
      o.center_hz = quantity(modes_center, Dimension::Frequency);
      o.center_q = modes_center_q;
      o.bandwidth_hz = parse_quantity(modes_bandwidth, Dimension::Frequency);
      o.bandwidth_fsr = modes_bandwidth_fsr;
      o.arm = modes_arm;
      return run_modes(o, std::cout, std::cerr);
    }
    if (*simulate) {
      sim.format = parse_format(sim_format);
      return run_simulate(sim, std::cout, std::cerr);
    }
    if (*sweep) {
      ns.sweep.kind = parse_sweep_kind(ns_mode);
      ns.sweep.grid = parse_grid(ns_grid);
      ns.sweep.phi = parse_angle(ns_phi);
      ns.sweep.sigma = parse_angle(ns_sigma);
      ns.out_path = ns_out;
      return run_noise_sweep(ns, std::cout, std::cerr);
    }
    if (*feas) {
      fe.layout.lambda = parse_quantity(fe_lambda, Dimension::Length);
      fe.layout.l_cav = parse_quantity(fe_lcav, Dimension::Length);
      fe.layout.l_nl = parse_quantity(fe_lnl, Dimension::Length);
      fe.n2 = quantity(fe_n2, Dimension::None);
      fe.w = quantity(fe_w, Dimension::Length);
      fe.power = quantity(fe_power, Dimension::Power);
      fe.q_factor = quantity(fe_q, Dimension::None);
      fe.report.ops = parse_int_list(fe_ops);
      fe.report.laser_linewidth_hz = quantity(fe_linewidth, Dimension::Frequency);
      if (!fe_target.empty()) fe.report.target_phase = parse_angle(fe_target);
      fe.format = parse_format(fe_format);
      return run_feasibility(fe, std::cout, std::cerr);
    }
    if (*oracle) {
      return run_oracle_check(oc, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
