#include "cavq/constants.hpp"
#include "cavq/feasibility.hpp"
#include "cavq/fock.hpp"
#include "cavq/monte_carlo.hpp"
#include "cavq/polarization.hpp"
#include "cavq/transit.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace cavq;

static void BM_ApplySingle(benchmark::State& state) {
  const int arms = static_cast<int>(state.range(0));
  RegisterState psi = RegisterState::zero(arms);
  const SingleQubitUnitary h = hadamard();
  for (auto _ : state) {
    psi = apply_single(psi, arms / 2, h);
    benchmark::DoNotOptimize(psi);
  }
}
BENCHMARK(BM_ApplySingle)->Arg(4)->Arg(8)->Arg(12);

static void BM_AccumulateNoisy(benchmark::State& state) {
  const TransitPlan plan = plan_gate(GateTarget::equatorial(kPi / 2.0, 0.0), 1500, 2);
  NoiseConfig noise;
  noise.sigma = 4e-4;
  RandomStream rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(accumulate(plan, &noise, rng));
  }
  state.SetItemsProcessed(state.iterations() * plan.transits());
}
BENCHMARK(BM_AccumulateNoisy);

static void BM_HphTrials(benchmark::State& state) {
  SweepConfig cfg;
  cfg.grid = {4e-4};
  cfg.noise.trials = 20;
  cfg.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(monte_carlo_fidelity(cfg));
  }
}
BENCHMARK(BM_HphTrials)->Unit(benchmark::kMillisecond);

static void BM_KerrUnitary(benchmark::State& state) {
  const FockSpace space(static_cast<int>(state.range(0)), 4);
  const std::vector<int> a{1};
  const std::vector<int> b{3};
  for (auto _ : state) {
    benchmark::DoNotOptimize(kerr_unitary(space, 0.5, a, b));
  }
}
BENCHMARK(BM_KerrUnitary)->Arg(2)->Arg(4)->Arg(8);

static void BM_FeasibilityReport(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_regime(Regime::Moderate));
  }
}
BENCHMARK(BM_FeasibilityReport);
BENCHMARK_MAIN();
