#include "cli/commands.hpp"

#include "cli/circuit.hpp"
#include "cli/quantity.hpp"

#include "cavq/cavity_modes.hpp"
#include "cavq/errors.hpp"
#include "cavq/oracle_suite.hpp"
#include "cavq/polarization.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

namespace cavq::cli {
namespace {

using nlohmann::ordered_json;

double rounded(double value) { return std::strtod(format_number(value).c_str(), nullptr); }

std::string bit_string(std::size_t index, int num_arms) {
  std::string bits;
  for (int a = num_arms - 1; a >= 0; --a) {
    bits += ((index >> a) & 1U) ? '1' : '0';
  }
  return bits;
}

// Runs `body`, mapping exceptions onto exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::ios_base::failure& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
}

// Streams to a file when a path is given, otherwise to `fallback`.
class Sink {
 public:
  Sink(const std::optional<std::string>& path, std::ostream& fallback) : stream_(&fallback) {
    if (path) {
      file_.open(*path, std::ios::binary | std::ios::trunc);
      if (!file_) {
        throw std::ios_base::failure("cannot open '" + *path + "' for writing");
      }
      stream_ = &file_;
    }
  }

  std::ostream& stream() { return *stream_; }

  void finish(const std::optional<std::string>& path) {
    stream_->flush();
    if (path && !file_) {
      throw std::ios_base::failure("write to '" + *path + "' failed");
    }
  }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

ordered_json report_json(const FeasibilityReport& r) {
  ordered_json j;
  j["regime"] = r.regime.empty() ? ordered_json(nullptr) : ordered_json(r.regime);
  j["input"] = {{"lambda", rounded(r.input.lambda)}, {"l_cav", rounded(r.input.l_cav)},
                {"l_nl", rounded(r.input.l_nl)},     {"n2", rounded(r.input.n2)},
                {"w", rounded(r.input.w)},           {"power", rounded(r.input.power)},
                {"q_factor", rounded(r.input.q_factor)}};
  j["derived"] = {{"area", rounded(r.derived.area)},   {"intensity", rounded(r.derived.intensity)},
                  {"omega", rounded(r.derived.omega)}, {"tau", rounded(r.derived.tau)},
                  {"n_rt", rounded(r.derived.n_rt)}};
  j["phi0"] = rounded(r.phi0);
  j["phi_tot"] = rounded(r.phi_tot);
  j["feasible"] = r.feasible;
  j["linewidth_budget"] = ordered_json::array();
  for (const LinewidthEntry& e : r.linewidth_budget) {
    j["linewidth_budget"].push_back(
        {{"n_ops", e.n_ops}, {"delta_nu_max_hz", rounded(e.delta_nu_max_hz)}});
  }
  if (r.coherence) {
    const CoherenceResult& c = *r.coherence;
    j["coherence"] = {{"laser_linewidth_hz", rounded(c.laser_linewidth_hz)},
                      {"tau_coh", rounded(c.tau_coh)},
                      {"ratio", rounded(c.ratio)},
                      {"margin", rounded(c.margin)},
                      {"passed", c.passed}};
  } else {
    j["coherence"] = nullptr;
  }
  j["target_phase"] = rounded(r.target_phase);
  j["implied_length_ratio"] = rounded(r.implied_length_ratio);
  return j;
}

void write_report_csv_header(const FeasibilityReport& r, std::ostream& out) {
  out << "regime,lambda,l_cav,l_nl,n2,w,power,q_factor,area,intensity,omega,tau,n_rt,phi0,"
         "phi_tot,feasible,target_phase,implied_length_ratio";
  for (const LinewidthEntry& e : r.linewidth_budget) {
    out << ",delta_nu_max_hz_" << e.n_ops;
  }
  if (r.coherence) {
    out << ",tau_coh,coherence_ratio,coherence_passed";
  }
  out << '\n';
}

void write_report_csv_row(const FeasibilityReport& r, std::ostream& out) {
  const FeasibilityInput& in = r.input;
  const DerivedQuantities& d = r.derived;
  out << r.regime;
  for (double v : {in.lambda, in.l_cav, in.l_nl, in.n2, in.w, in.power, in.q_factor, d.area,
                   d.intensity, d.omega, d.tau, d.n_rt, r.phi0, r.phi_tot}) {
    out << ',' << format_number(v);
  }
  out << ',' << (r.feasible ? "true" : "false") << ',' << format_number(r.target_phase) << ','
      << format_number(r.implied_length_ratio);
  for (const LinewidthEntry& e : r.linewidth_budget) {
    out << ',' << format_number(e.delta_nu_max_hz);
  }
  if (r.coherence) {
    out << ',' << format_number(r.coherence->tau_coh) << ',' << format_number(r.coherence->ratio)
        << ',' << (r.coherence->passed ? "true" : "false");
  }
  out << '\n';
}

double* sweep_field(FeasibilityInput& in, const std::string& name) {
  if (name == "lambda") return &in.lambda;
  if (name == "l_cav") return &in.l_cav;
  if (name == "l_nl") return &in.l_nl;
  if (name == "n2") return &in.n2;
  if (name == "w") return &in.w;
  if (name == "power") return &in.power;
  if (name == "q_factor") return &in.q_factor;
  throw std::invalid_argument("unknown sweep field '" + name + "'");
}

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) {
    return "0";
  }
  std::ostringstream os;
  os.precision(12);
  os << value;
  return os.str();
}

int run_modes(const ModesOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const CavityGeometry geometry{options.length_m};
    const double fsr = free_spectral_range(geometry);
    double center = 0.0;
    if (options.center_q) {
      center = mode_frequency_hz(geometry, *options.center_q);
    } else if (options.center_hz) {
      center = *options.center_hz;
    } else {
      throw std::invalid_argument("either --center or --center-q is required");
    }
    const double bandwidth = options.bandwidth_fsr ? *options.bandwidth_fsr * fsr
                                                   : options.bandwidth_hz;
    const Bundle bundle = select_bundle(geometry, center, bandwidth, options.arm);
    out << "q,nu_hz,omega_rad_s\n";
    for (const ModeEntry& e : mode_comb(geometry, bundle).entries) {
      out << e.q << ',' << format_number(e.nu_hz) << ',' << format_number(e.omega_rad_s) << '\n';
    }
    return int{kOk};
  });
}

int run_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const CircuitProgram program = parse_circuit_file(options.circuit_path, options.num_arms);
    const RegisterState state = execute(program);
    const int m = state.num_arms();

    if (options.format == Format::Json) {
      ordered_json j;
      j["num_arms"] = m;
      j["amplitudes"] = ordered_json::array();
      for (std::size_t k = 0; k < state.dimension(); ++k) {
        const auto a = state.amplitude(k);
        j["amplitudes"].push_back({{"index", k},
                                   {"bits", bit_string(k, m)},
                                   {"re", rounded(a.real())},
                                   {"im", rounded(a.imag())},
                                   {"probability", rounded(std::norm(a))}});
      }
      j["expect_z"] = ordered_json::array();
      for (int a = 0; a < m; ++a) {
        j["expect_z"].push_back(rounded(expect_z(state, a)));
      }
      out << j.dump(2) << '\n';
    } else {
      out << "index,bits,re,im,probability\n";
      for (std::size_t k = 0; k < state.dimension(); ++k) {
        const auto a = state.amplitude(k);
        out << k << ',' << bit_string(k, m) << ',' << format_number(a.real()) << ','
            << format_number(a.imag()) << ',' << format_number(std::norm(a)) << '\n';
      }
      out << "\narm,expect_z\n";
      for (int a = 0; a < m; ++a) {
        out << a << ',' << format_number(expect_z(state, a)) << '\n';
      }
    }
    return int{kOk};
  });
}

void write_curve_csv(const std::vector<CurvePoint>& curve, std::ostream& out) {
  out << "param,mean_fidelity,std_err,trials\n";
  for (const CurvePoint& p : curve) {
    out << format_number(p.param) << ',' << format_number(p.mean_fidelity) << ','
        << format_number(p.std_err) << ',' << p.trials << '\n';
  }
}

int run_noise_sweep(const NoiseSweepOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    // Open the sink first so an unwritable path fails before the simulation runs.
    Sink sink(options.out_path, out);
    write_curve_csv(monte_carlo_fidelity(options.sweep), sink.stream());
    sink.finish(options.out_path);
    return int{kOk};
  });
}

int run_feasibility(const FeasibilityOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    FeasibilityInput input;
    ReportOptions report = options.report;
    std::string regime_name;
    if (options.preset) {
      const Regime regime = parse_regime(*options.preset);
      input = regime_input(regime, options.layout);
      regime_name = regime_preset(regime).name;
      if (!report.target_phase) {
        report.target_phase = regime_preset(regime).reference_phi_tot;
      }
    } else {
      if (!options.n2 || !options.w || !options.power || !options.q_factor) {
        throw std::invalid_argument("without --preset, --n2, --w, --power and --q are required");
      }
      input.lambda = options.layout.lambda;
      input.l_cav = options.layout.l_cav;
      input.l_nl = options.layout.l_nl;
    }
    if (options.n2) input.n2 = *options.n2;
    if (options.w) input.w = *options.w;
    if (options.power) input.power = *options.power;
    if (options.q_factor) input.q_factor = *options.q_factor;

    std::vector<FeasibilityReport> reports;
    if (options.sweep) {
      const auto eq = options.sweep->find('=');
      if (eq == std::string::npos) {
        throw std::invalid_argument("--sweep expects field=start:stop:count");
      }
      const std::string field = options.sweep->substr(0, eq);
      for (double v : parse_grid(options.sweep->substr(eq + 1))) {
        FeasibilityInput point = input;
        *sweep_field(point, field) = v;
        reports.push_back(evaluate(point, report));
        reports.back().regime = regime_name;
      }
    } else {
      reports.push_back(evaluate(input, report));
      reports.back().regime = regime_name;
    }

    Sink sink(options.out_path, out);
    std::ostream& os = sink.stream();
    if (options.format == Format::Json) {
      if (reports.size() == 1) {
        os << report_json(reports.front()).dump(2) << '\n';
      } else {
        ordered_json arr = ordered_json::array();
        for (const auto& r : reports) arr.push_back(report_json(r));
        os << arr.dump(2) << '\n';
      }
    } else {
      write_report_csv_header(reports.front(), os);
      for (const auto& r : reports) write_report_csv_row(r, os);
    }
    sink.finish(options.out_path);
    return int{kOk};
  });
}

int run_oracle_check(const OracleCheckOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    OracleOptions opts;
    opts.n_max = options.n_max;
    opts.inject_sign_flip = options.inject_sign_flip;
    const auto checks = run_oracle_suite(opts);
    int passed = 0;
    for (const OracleCheck& c : checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name << "  " << c.detail << '\n';
      passed += c.passed ? 1 : 0;
    }
    out << passed << '/' << checks.size() << " checks passed\n";
    if (passed != static_cast<int>(checks.size())) {
      err << "oracle check failed\n";
      return int{kCheckFailed};
    }
    return int{kOk};
  });
}

}  // namespace cavq::cli
