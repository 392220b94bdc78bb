#pragma once

// Parameter-scaling feasibility analysis of the accumulated cross-Kerr phase.
// All quantities are SI.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cavq {

struct FeasibilityInput {
  double lambda = 980e-9;  // wavelength, m
  double l_cav = 0.15;     // cavity length, m
  double l_nl = 0.01;      // nonlinear interaction length, m
  double n2 = 0.0;         // nonlinear refractive index, m^2/W
  double w = 0.0;          // beam waist, m
  double power = 0.0;      // CW power, W
  double q_factor = 0.0;
};

/// Throws ValidationError naming every offending field. n2 may be zero (no nonlinearity);
/// everything else must be strictly positive, and l_nl <= l_cav.
void validate(const FeasibilityInput& input);

struct DerivedQuantities {
  double area = 0.0;       // pi w^2
  double intensity = 0.0;  // P / A
  double omega = 0.0;      // 2 pi c / lambda
  double tau = 0.0;        // Q / omega
  double n_rt = 0.0;       // c tau / (2 L_cav)
};

DerivedQuantities derive(const FeasibilityInput& input);

/// (2 pi / lambda) n2 I L_nl
double phi_single_pass(const FeasibilityInput& input, const DerivedQuantities& derived);

/// phi0 * N_rt
double phi_total(const FeasibilityInput& input, const DerivedQuantities& derived);

/// phi_tot >= pi
bool is_feasible(double phi_tot);

/// 1 / (N tau). Throws DomainError for tau <= 0 or n_ops < 1.
double max_linewidth(double tau, long long n_ops);

struct CoherenceResult {
  double laser_linewidth_hz = 0.0;
  double tau_coh = 0.0;
  double ratio = 0.0;  // tau_coh / tau
  double margin = 0.0;
  bool passed = false;
};

/// tau_coh = 1 / linewidth; passes iff tau_coh >= margin * tau.
CoherenceResult coherence_check(double laser_linewidth_hz, double tau, double margin = 10.0);

/// L_nl / L_cav needed for phi_tot to equal target_phase (lambda drops out).
double implied_length_ratio(const FeasibilityInput& input, double target_phase);

enum class Regime { Conservative, Moderate, Aggressive };

struct RegimePreset {
  Regime regime;
  std::string name;
  double n2 = 0.0;
  double power = 0.0;
  double w = 0.0;
  double q_factor = 0.0;
  double reference_tau = 0.0;      // tabulated lifetime, s
  double reference_phi_tot = 0.0;  // tabulated total phase, rad
};

const std::vector<RegimePreset>& regime_presets();
const RegimePreset& regime_preset(Regime regime);
/// Throws ValidationError for an unknown name.
Regime parse_regime(std::string_view name);

struct CavityLayout {
  double lambda = 980e-9;
  double l_cav = 0.15;
  double l_nl = 0.01;
};

struct LinewidthEntry {
  long long n_ops = 0;
  double delta_nu_max_hz = 0.0;
};

struct FeasibilityReport {
  FeasibilityInput input;
  DerivedQuantities derived;
  double phi0 = 0.0;
  double phi_tot = 0.0;
  bool feasible = false;
  std::vector<LinewidthEntry> linewidth_budget;
  std::optional<CoherenceResult> coherence;
  double target_phase = 0.0;
  double implied_length_ratio = 0.0;
  std::string regime;  // empty for explicit parameters
};

struct ReportOptions {
  std::vector<long long> ops{10, 100, 1000};
  std::optional<double> laser_linewidth_hz;
  double coherence_margin = 10.0;
  /// Phase the implied-geometry ratio aims for; defaults to pi (or the preset's reference phase).
  std::optional<double> target_phase;
};

FeasibilityReport evaluate(const FeasibilityInput& input, const ReportOptions& options = {});

FeasibilityReport evaluate_regime(Regime regime, const CavityLayout& layout = {},
                                  const ReportOptions& options = {});

FeasibilityInput regime_input(Regime regime, const CavityLayout& layout = {});

}  // namespace cavq
