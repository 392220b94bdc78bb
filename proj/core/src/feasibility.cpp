#include "cavq/feasibility.hpp"

#include "cavq/constants.hpp"
#include "cavq/errors.hpp"

#include <cmath>
#include <string>

namespace cavq {
namespace {

bool positive(double x) { return x > 0.0 && std::isfinite(x); }

}  // namespace

void validate(const FeasibilityInput& in) {
  std::string bad;
  auto flag = [&](bool ok, const char* name) {
    if (!ok) {
      bad += bad.empty() ? "" : ", ";
      bad += name;
    }
  };
  flag(positive(in.lambda), "lambda");
  flag(positive(in.l_cav), "l_cav");
  flag(positive(in.l_nl), "l_nl");
  flag(in.n2 >= 0.0 && std::isfinite(in.n2), "n2");
  flag(positive(in.w), "w");
  flag(positive(in.power), "power");
  flag(positive(in.q_factor), "q_factor");
  if (!bad.empty()) {
    throw ValidationError("invalid feasibility input: " + bad);
  }
  if (in.l_nl > in.l_cav) {
    throw ValidationError("invalid feasibility input: l_nl exceeds l_cav");
  }
}

DerivedQuantities derive(const FeasibilityInput& in) {
  validate(in);
  DerivedQuantities d;
  d.area = kPi * in.w * in.w;
  d.intensity = in.power / d.area;
  d.omega = kTwoPi * kSpeedOfLight / in.lambda;
  d.tau = in.q_factor / d.omega;
  d.n_rt = kSpeedOfLight * d.tau / (2.0 * in.l_cav);
  return d;
}

double phi_single_pass(const FeasibilityInput& in, const DerivedQuantities& d) {
  validate(in);
  return (kTwoPi / in.lambda) * in.n2 * d.intensity * in.l_nl;
}

double phi_total(const FeasibilityInput& in, const DerivedQuantities& d) {
  return phi_single_pass(in, d) * d.n_rt;
}

bool is_feasible(double phi_tot) { return phi_tot >= kPi; }

double max_linewidth(double tau, long long n_ops) {
  if (!positive(tau)) {
    throw DomainError("photon lifetime must be positive");
  }
  if (n_ops < 1) {
    throw DomainError("number of operations must be >= 1");
  }
  return 1.0 / (static_cast<double>(n_ops) * tau);
}

CoherenceResult coherence_check(double laser_linewidth_hz, double tau, double margin) {
  if (!positive(laser_linewidth_hz) || !positive(tau) || !positive(margin)) {
    throw DomainError("coherence check needs positive linewidth, lifetime and margin");
  }
  CoherenceResult r;
  r.laser_linewidth_hz = laser_linewidth_hz;
  r.tau_coh = 1.0 / laser_linewidth_hz;
  r.ratio = r.tau_coh / tau;
  r.margin = margin;
  r.passed = r.tau_coh >= margin * tau;
  return r;
}

double implied_length_ratio(const FeasibilityInput& in, double target_phase) {
  const DerivedQuantities d = derive(in);
  const double gain = in.n2 * d.intensity * in.q_factor;
  if (!(gain > 0.0)) {
    throw DomainError("no nonlinear phase is reachable with n2 = 0");
  }
  // phi_tot = n2 I Q (L_nl / L_cav) / 2
  return 2.0 * target_phase / gain;
}

const std::vector<RegimePreset>& regime_presets() {
  static const std::vector<RegimePreset> presets{
      {Regime::Conservative, "conservative", 1e-18, 20.0, 30e-6, 5e9, 2.6e-6, 1.2},
      {Regime::Moderate, "moderate", 5e-18, 30.0, 25e-6, 7e9, 3.6e-6, 4.1},
      {Regime::Aggressive, "aggressive", 1e-17, 40.0, 20e-6, 1e10, 5.2e-6, 5.2},
  };
  return presets;
}

const RegimePreset& regime_preset(Regime regime) {
  for (const RegimePreset& p : regime_presets()) {
    if (p.regime == regime) {
      return p;
    }
  }
  throw ValidationError("unknown regime");
}

Regime parse_regime(std::string_view name) {
  for (const RegimePreset& p : regime_presets()) {
    if (p.name == name) {
      return p.regime;
    }
  }
  throw ValidationError("unknown preset '" + std::string(name) +
                        "' (expected conservative, moderate or aggressive)");
}

FeasibilityInput regime_input(Regime regime, const CavityLayout& layout) {
  const RegimePreset& p = regime_preset(regime);
  FeasibilityInput in;
  in.lambda = layout.lambda;
  in.l_cav = layout.l_cav;
  in.l_nl = layout.l_nl;
  in.n2 = p.n2;
  in.w = p.w;
  in.power = p.power;
  in.q_factor = p.q_factor;
  return in;
}

FeasibilityReport evaluate(const FeasibilityInput& input, const ReportOptions& options) {
  FeasibilityReport r;
  r.input = input;
  r.derived = derive(input);
  r.phi0 = phi_single_pass(input, r.derived);
  r.phi_tot = r.phi0 * r.derived.n_rt;
  r.feasible = is_feasible(r.phi_tot);
  for (long long n : options.ops) {
    r.linewidth_budget.push_back({n, max_linewidth(r.derived.tau, n)});
  }
  if (options.laser_linewidth_hz) {
    r.coherence = coherence_check(*options.laser_linewidth_hz, r.derived.tau, options.coherence_margin);
  }
  r.target_phase = options.target_phase.value_or(kPi);
  r.implied_length_ratio = input.n2 > 0.0 ? implied_length_ratio(input, r.target_phase) : 0.0;
  return r;
}

FeasibilityReport evaluate_regime(Regime regime, const CavityLayout& layout,
                                  const ReportOptions& options) {
  const RegimePreset& p = regime_preset(regime);
  ReportOptions opts = options;
  if (!opts.target_phase) {
    opts.target_phase = p.reference_phi_tot;
  }
  FeasibilityReport r = evaluate(regime_input(regime, layout), opts);
  r.regime = p.name;
  return r;
}

}  // namespace cavq
