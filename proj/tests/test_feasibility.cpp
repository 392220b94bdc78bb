#include <doctest.h>

#include "cavq/constants.hpp"
#include "cavq/errors.hpp"
#include "cavq/feasibility.hpp"

#include <cmath>
#include <string>

using namespace cavq;

namespace {

// Hand evaluation in long double of phi_tot = (2 pi n2 I L_nl / lambda) * c tau / (2 L_cav).
long double hand_phi_tot(long double lambda, long double l_cav, long double l_nl, long double n2,
                         long double w, long double power, long double q) {
  const long double pi = 3.141592653589793238462643383279L;
  const long double c = 299792458.0L;
  const long double intensity = power / (pi * w * w);
  const long double tau = q * lambda / (2.0L * pi * c);
  const long double phi0 = 2.0L * pi * n2 * intensity * l_nl / lambda;
  return phi0 * c * tau / (2.0L * l_cav);
}

}  // namespace

TEST_CASE("derived quantities for the conservative preset") {
  const FeasibilityInput in = regime_input(Regime::Conservative);
  const DerivedQuantities d = derive(in);
  CHECK(d.area == doctest::Approx(2.82743338823e-9).epsilon(1e-11));
  CHECK(d.intensity == doctest::Approx(7073553026.306).epsilon(1e-11));
  CHECK(d.tau == doctest::Approx(2.60133035485e-6).epsilon(1e-11));
  CHECK(d.n_rt == doctest::Approx(2599.530737).epsilon(1e-9));
  CHECK(phi_single_pass(in, d) == doctest::Approx(4.53514739229e-4).epsilon(1e-11));
  CHECK(phi_total(in, d) == doctest::Approx(1.178925504384).epsilon(1e-11));
  const double hand = static_cast<double>(hand_phi_tot(980e-9L, 0.15L, 0.01L, 1e-18L, 30e-6L, 20.0L, 5e9L));
  CHECK(std::abs(phi_total(in, d) - hand) / hand < 1e-12);
}

TEST_CASE("lifetimes of the three presets") {
  const double expected[] = {2.60133035485e-6, 3.64186249679e-6, 5.20266070970e-6};
  int i = 0;
  for (const RegimePreset& p : regime_presets()) {
    const DerivedQuantities d = derive(regime_input(p.regime));
    CHECK(d.tau == doctest::Approx(expected[i]).epsilon(1e-11));
    CHECK(std::abs(d.tau - p.reference_tau) / p.reference_tau < 0.02);
    ++i;
  }
}

TEST_CASE("total phase does not depend on wavelength") {
  FeasibilityInput in = regime_input(Regime::Moderate);
  in.lambda = 980e-9;
  const double base = phi_total(in, derive(in));
  for (double lambda : {500e-9, 1550e-9, 2e-6}) {
    in.lambda = lambda;
    CHECK(std::abs(phi_total(in, derive(in)) - base) / base < 1e-12);
  }
}

TEST_CASE("feasibility threshold and linewidth budget") {
  CHECK(is_feasible(kPi));
  CHECK_FALSE(is_feasible(3.14));
  CHECK(max_linewidth(2.6e-6, 10) == doctest::Approx(38461.5384615385).epsilon(1e-10));
  CHECK(max_linewidth(3.6e-6, 1000) == doctest::Approx(277.777777777778).epsilon(1e-10));
  CHECK_THROWS_AS(max_linewidth(0.0, 10), DomainError);
  CHECK_THROWS_AS(max_linewidth(1e-6, 0), DomainError);
}

TEST_CASE("coherence check") {
  const double tau = 2.60133035485e-6;
  const CoherenceResult ok = coherence_check(1000.0, tau);
  CHECK(ok.tau_coh == doctest::Approx(1e-3));
  CHECK(ok.ratio == doctest::Approx(384.4187).epsilon(1e-6));
  CHECK(ok.passed);
  CHECK_FALSE(coherence_check(1e5, tau).passed);
  CHECK(coherence_check(1.0 / (10.0 * tau), tau).passed);
  CHECK_THROWS_AS(coherence_check(0.0, tau), DomainError);
}

TEST_CASE("implied length ratios") {
  const double expected[] = {0.0678584013175, 0.0153339641425, 0.00326725635973};
  int i = 0;
  for (const RegimePreset& p : regime_presets()) {
    const FeasibilityInput in = regime_input(p.regime);
    const double r = implied_length_ratio(in, p.reference_phi_tot);
    CHECK(r == doctest::Approx(expected[i]).epsilon(1e-10));
    ++i;
  }
  FeasibilityInput zero = regime_input(Regime::Conservative);
  zero.n2 = 0.0;
  CHECK_THROWS_AS(implied_length_ratio(zero, kPi), DomainError);
}

TEST_CASE("input validation names every bad field") {
  FeasibilityInput in;
  in.w = -1.0;
  in.power = 0.0;
  in.q_factor = 5e9;
  try {
    validate(in);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("w") != std::string::npos);
    CHECK(msg.find("power") != std::string::npos);
    CHECK(msg.find("q_factor") == std::string::npos);
  }
  FeasibilityInput longer = regime_input(Regime::Conservative);
  longer.l_nl = 0.2;
  CHECK_THROWS_AS(validate(longer), ValidationError);
  FeasibilityInput linear = regime_input(Regime::Conservative);
  linear.n2 = 0.0;
  CHECK_NOTHROW(validate(linear));
  CHECK(phi_total(linear, derive(linear)) == 0.0);
}

TEST_CASE("presets and full report") {
  CHECK(parse_regime("conservative") == Regime::Conservative);
  CHECK(parse_regime("aggressive") == Regime::Aggressive);
  CHECK_THROWS_AS(parse_regime("extreme"), ValidationError);
  const RegimePreset& m = regime_preset(Regime::Moderate);
  CHECK(m.name == "moderate");
  CHECK(m.q_factor == 7e9);

  ReportOptions opts;
  opts.laser_linewidth_hz = 1000.0;
  const FeasibilityReport r = evaluate_regime(Regime::Conservative, {}, opts);
  CHECK(r.regime == "conservative");
  CHECK(r.phi_tot == doctest::Approx(1.178925504384).epsilon(1e-11));
  CHECK_FALSE(r.feasible);
  REQUIRE(r.linewidth_budget.size() == 3);
  CHECK(r.linewidth_budget[0].n_ops == 10);
  CHECK(r.linewidth_budget[2].delta_nu_max_hz == doctest::Approx(384.4187).epsilon(1e-6));
  REQUIRE(r.coherence.has_value());
  CHECK(r.coherence->passed);
  CHECK(r.target_phase == 1.2);
  CHECK(r.implied_length_ratio == doctest::Approx(0.0678584013175).epsilon(1e-10));

  const FeasibilityReport plain = evaluate(regime_input(Regime::Aggressive));
  CHECK(plain.regime.empty());
  CHECK(plain.target_phase == kPi);
  CHECK_FALSE(plain.coherence.has_value());
}
