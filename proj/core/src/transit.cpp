#include "cavq/transit.hpp"

#include "cavq/constants.hpp"
#include "cavq/errors.hpp"

#include <cmath>
#include <complex>
#include <string>

namespace cavq {
namespace {

using cd = std::complex<double>;

void require_finite(const ElementSettings& s) {
  if (!std::isfinite(s.s_phase) || !std::isfinite(s.p_theta) || !std::isfinite(s.p_gamma)) {
    throw DomainError("element settings must be finite");
  }
}

void check_plan(const TransitPlan& plan) {
  if (plan.round_trips < 1 || plan.passes_per_round_trip < 1) {
    throw ValidationError("a transit plan needs round_trips >= 1 and passes >= 1");
  }
  require_finite(plan.settings);
}

// Raw 2x2 per-transit product; the hot loop stays off the checked wrapper.
Matrix2 transit_matrix(double s_phase, double p_theta, const cd& axis, TransitOrder order) {
  const cd ez = std::polar(1.0, -0.5 * s_phase);
  const double c = std::cos(0.5 * p_theta);
  const double s = std::sin(0.5 * p_theta);
  // rperp: [[c, -i s conj(axis)], [-i s axis, c]], axis = e^{i gamma}
  const cd upper = cd(0.0, -s) * std::conj(axis);
  const cd lower = cd(0.0, -s) * axis;
  Matrix2 m;
  if (order == TransitOrder::MixThenPhase) {
    // diag(ez, conj(ez)) * rperp
    m << ez * c, ez * upper, std::conj(ez) * lower, std::conj(ez) * c;
  } else {
    // rperp * diag(ez, conj(ez))
    m << c * ez, upper * std::conj(ez), lower * ez, c * std::conj(ez);
  }
  return m;
}

}  // namespace

SingleQubitUnitary GateTarget::unitary() const {
  return axis == RotationAxis::Polar ? rz(angle) : rperp(angle, gamma);
}

SingleQubitUnitary per_transit_unitary(const ElementSettings& settings, TransitOrder order) {
  return order == TransitOrder::MixThenPhase
             ? rz(settings.s_phase) * rperp(settings.p_theta, settings.p_gamma)
             : rperp(settings.p_theta, settings.p_gamma) * rz(settings.s_phase);
}

TransitPlan plan_gate(const GateTarget& target, int round_trips, int passes_per_round_trip) {
  if (round_trips < 1 || passes_per_round_trip < 1) {
    throw ValidationError("plan_gate needs K * p >= 1, got K = " + std::to_string(round_trips) +
                          ", p = " + std::to_string(passes_per_round_trip));
  }
  if (!std::isfinite(target.angle) || !std::isfinite(target.gamma)) {
    throw DomainError("gate target angles must be finite");
  }
  TransitPlan plan;
  plan.round_trips = round_trips;
  plan.passes_per_round_trip = passes_per_round_trip;
  const double per_transit = target.angle / static_cast<double>(plan.transits());
  if (target.axis == RotationAxis::Polar) {
    plan.settings.s_phase = per_transit;
  } else {
    plan.settings.p_theta = per_transit;
    plan.settings.p_gamma = target.gamma;
  }
  return plan;
}

SingleQubitUnitary accumulate(const TransitPlan& plan, const NoiseConfig* noise,
                              RandomStream& rng) {
  check_plan(plan);
  const ElementSettings& s = plan.settings;
  const cd axis = std::polar(1.0, s.p_gamma);
  const std::int64_t n = plan.transits();

  Matrix2 total = Matrix2::Identity();
  if (noise == nullptr || noise->sigma == 0.0) {
    const Matrix2 step = transit_matrix(s.s_phase, s.p_theta, axis, plan.order);
    for (std::int64_t t = 0; t < n; ++t) {
      total = step * total;
    }
  } else {
    if (!(noise->sigma >= 0.0)) {
      throw ValidationError("noise sigma must be non-negative");
    }
    const bool perturb_phase = noise->perturb_all || s.s_phase != 0.0;
    const bool perturb_mix = noise->perturb_all || s.p_theta != 0.0;
    for (std::int64_t t = 0; t < n; ++t) {
      const double phase = perturb_phase ? s.s_phase + rng.gaussian(noise->sigma) : s.s_phase;
      const double mix = perturb_mix ? s.p_theta + rng.gaussian(noise->sigma) : s.p_theta;
      total = transit_matrix(phase, mix, axis, plan.order) * total;
    }
  }
  // Drift after tens of thousands of products is ~1e-13, far inside the unitary check.
  return SingleQubitUnitary(total);
}

SingleQubitUnitary accumulate(const std::vector<TransitPlan>& plans, const NoiseConfig* noise,
                              RandomStream& rng) {
  SingleQubitUnitary total;
  for (const TransitPlan& plan : plans) {
    total = accumulate(plan, noise, rng) * total;
  }
  return total;
}

RegisterState run_plan(const RegisterState& state, const TransitPlan& plan,
                       const std::optional<NoiseConfig>& noise, RandomStream& rng, int arm) {
  const NoiseConfig* cfg = noise ? &*noise : nullptr;
  return apply_single(state, arm, accumulate(plan, cfg, rng));
}

RegisterState run_plans(const RegisterState& state, const std::vector<TransitPlan>& plans,
                        const std::optional<NoiseConfig>& noise, RandomStream& rng, int arm) {
  const NoiseConfig* cfg = noise ? &*noise : nullptr;
  return apply_single(state, arm, accumulate(plans, cfg, rng));
}

std::vector<GateTarget> hadamard_factors() {
  // H = i Rz(pi/2) Rx(pi/2) Rz(pi/2); symmetric, so application order is the same.
  return {GateTarget::polar(kPi / 2.0), GateTarget::equatorial(kPi / 2.0, 0.0),
          GateTarget::polar(kPi / 2.0)};
}

std::vector<TransitPlan> hph_sequence(double phi, int round_trips_per_stage,
                                      int passes_per_round_trip) {
  if (round_trips_per_stage < 1) {
    throw ValidationError("hph_sequence needs at least one round trip per stage");
  }
  std::vector<TransitPlan> plans;
  for (const GateTarget& f : hadamard_factors()) {
    plans.push_back(plan_gate(f, round_trips_per_stage, passes_per_round_trip));
  }
  // P(phi) = e^{i phi/2} Rz(phi): the shifter accumulates differential phase phi.
  plans.push_back(plan_gate(GateTarget::polar(phi), round_trips_per_stage, passes_per_round_trip));
  for (const GateTarget& f : hadamard_factors()) {
    plans.push_back(plan_gate(f, round_trips_per_stage, passes_per_round_trip));
  }
  return plans;
}

}  // namespace cavq
