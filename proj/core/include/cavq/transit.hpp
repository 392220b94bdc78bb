#pragma once

// Per-transit accumulation: a gate is realized by holding the phase shifter (S)
// and the mixing element (P) at small fixed values while the field passes them
// K * p times.

#include "cavq/polarization.hpp"
#include "cavq/random.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cavq {

/// Element order inside one transit. MixThenPhase gives rz(s) * rperp(theta, gamma).
enum class TransitOrder { MixThenPhase, PhaseThenMix };

struct ElementSettings {
  double s_phase = 0.0;  // differential phase per transit
  double p_theta = 0.0;  // mixing angle per transit
  double p_gamma = 0.0;  // mixing axis, angle from x
};

struct TransitPlan {
  ElementSettings settings;
  int round_trips = 1;
  int passes_per_round_trip = 2;
  TransitOrder order = TransitOrder::MixThenPhase;

  std::int64_t transits() const {
    return static_cast<std::int64_t>(round_trips) * passes_per_round_trip;
  }
};

struct NoiseConfig {
  double sigma = 0.0;  // std deviation of the additive per-transit angle error
  int trials = 200;
  std::uint64_t seed = 0;
  bool perturb_all = false;  // also perturb angles that are nominally zero
};

enum class RotationAxis { Polar, Equatorial };

/// A single rz(angle) or rperp(angle, gamma) to be realized by accumulation.
struct GateTarget {
  RotationAxis axis = RotationAxis::Polar;
  double angle = 0.0;
  double gamma = 0.0;

  static GateTarget polar(double phi) { return {RotationAxis::Polar, phi, 0.0}; }
  static GateTarget equatorial(double theta, double gamma) {
    return {RotationAxis::Equatorial, theta, gamma};
  }

  SingleQubitUnitary unitary() const;
};

SingleQubitUnitary per_transit_unitary(const ElementSettings& settings,
                                       TransitOrder order = TransitOrder::MixThenPhase);

/// Per-transit angle = target angle / (K * p). Throws ValidationError unless K >= 1 and p >= 1.
TransitPlan plan_gate(const GateTarget& target, int round_trips, int passes_per_round_trip = 2);

/// Ordered product of the plan's K * p per-transit unitaries. With noise, every active
/// angle (or every angle, if perturb_all) gets a fresh N(0, sigma^2) draw per transit.
SingleQubitUnitary accumulate(const TransitPlan& plan, const NoiseConfig* noise, RandomStream& rng);

SingleQubitUnitary accumulate(const std::vector<TransitPlan>& plans, const NoiseConfig* noise,
                              RandomStream& rng);

RegisterState run_plan(const RegisterState& state, const TransitPlan& plan,
                       const std::optional<NoiseConfig>& noise, RandomStream& rng, int arm = 0);

RegisterState run_plans(const RegisterState& state, const std::vector<TransitPlan>& plans,
                        const std::optional<NoiseConfig>& noise, RandomStream& rng, int arm = 0);

/// The Euler factors of the Hadamard, in application order: rz(pi/2), rperp(pi/2, 0), rz(pi/2).
std::vector<GateTarget> hadamard_factors();

/// H P(phi) H as seven accumulated stages: three Hadamard factors, the phase stage
/// (differential phase phi), three Hadamard factors. Listed in application order.
std::vector<TransitPlan> hph_sequence(double phi, int round_trips_per_stage,
                                      int passes_per_round_trip = 2);

}  // namespace cavq
