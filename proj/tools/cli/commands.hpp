#pragma once

// Subcommand implementations behind the cavq executable. Each returns a process
// exit code; data goes to `out`, diagnostics to `err`.

#include "cavq/feasibility.hpp"
#include "cavq/monte_carlo.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace cavq::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParseError = 2,
  kRuntimeError = 3,
  kIoError = 4,
  kCheckFailed = 5,
};

enum class Format { Csv, Json };

/// 12 significant digits; "0" for zero.
std::string format_number(double value);

struct ModesOptions {
  double length_m = 0.0;
  std::optional<double> center_hz;
  std::optional<long long> center_q;
  double bandwidth_hz = 0.0;
  std::optional<double> bandwidth_fsr;
  int arm = 0;
};
int run_modes(const ModesOptions& options, std::ostream& out, std::ostream& err);

struct SimulateOptions {
  std::string circuit_path;
  std::optional<int> num_arms;
  Format format = Format::Csv;
};
int run_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err);

struct NoiseSweepOptions {
  SweepConfig sweep;
  std::optional<std::string> out_path;
};
int run_noise_sweep(const NoiseSweepOptions& options, std::ostream& out, std::ostream& err);

/// Writes `param,mean_fidelity,std_err,trials`.
void write_curve_csv(const std::vector<CurvePoint>& curve, std::ostream& out);

struct FeasibilityOptions {
  std::optional<std::string> preset;
  CavityLayout layout;
  std::optional<double> n2, w, power, q_factor;
  ReportOptions report;
  /// field=start:stop:count, varies one input linearly.
  std::optional<std::string> sweep;
  Format format = Format::Json;
  std::optional<std::string> out_path;
};
int run_feasibility(const FeasibilityOptions& options, std::ostream& out, std::ostream& err);

struct OracleCheckOptions {
  int n_max = 4;
  bool inject_sign_flip = false;
};
int run_oracle_check(const OracleCheckOptions& options, std::ostream& out, std::ostream& err);

}  // namespace cavq::cli
