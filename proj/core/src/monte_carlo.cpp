#include "cavq/monte_carlo.hpp"

#include "cavq/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

namespace cavq {
namespace {

int round_trips_for(std::int64_t reflections, int passes) {
  if (reflections < 1 || passes < 1 || reflections % passes != 0) {
    throw ValidationError("reflections (" + std::to_string(reflections) +
                          ") must be a positive multiple of passes per round trip (" +
                          std::to_string(passes) + ")");
  }
  return static_cast<int>(reflections / passes);
}

struct GridJob {
  std::vector<TransitPlan> plans;
  NoiseConfig noise;
  RegisterState reference = RegisterState::zero(1);
};

double run_trial(const GridJob& job, std::uint64_t sub_seed) {
  RandomStream rng(sub_seed);
  const RegisterState out = run_plans(RegisterState::zero(1), job.plans, job.noise, rng);
  return state_fidelity(job.reference, out);
}

}  // namespace

RegisterState hph_reference_state(double phi, int round_trips_per_stage, int passes) {
  RandomStream unused(0);
  return run_plans(RegisterState::zero(1), hph_sequence(phi, round_trips_per_stage, passes),
                   std::nullopt, unused);
}

std::vector<CurvePoint> monte_carlo_fidelity(const SweepConfig& config) {
  if (config.grid.empty()) {
    throw ValidationError("sweep grid is empty");
  }
  if (config.noise.trials < 1) {
    throw ValidationError("trials must be >= 1");
  }

  std::vector<GridJob> jobs;
  jobs.reserve(config.grid.size());
  for (double value : config.grid) {
    GridJob job;
    job.noise = config.noise;
    std::int64_t reflections = config.reflections;
    if (config.kind == SweepKind::Sigma) {
      job.noise.sigma = value;
    } else {
      if (value != std::floor(value)) {
        throw ValidationError("reflection counts must be integers");
      }
      reflections = static_cast<std::int64_t>(value);
      job.noise.sigma = config.sigma;
    }
    if (!(job.noise.sigma >= 0.0) || !std::isfinite(job.noise.sigma)) {
      throw ValidationError("noise sigma must be non-negative and finite");
    }
    const int k = round_trips_for(reflections, config.passes_per_round_trip);
    job.plans = hph_sequence(config.phi, k, config.passes_per_round_trip);
    job.reference = hph_reference_state(config.phi, k, config.passes_per_round_trip);
    jobs.push_back(std::move(job));
  }

  const auto trials = static_cast<std::size_t>(config.noise.trials);
  const std::size_t total = jobs.size() * trials;
  std::vector<double> fidelities(total);

  unsigned workers = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1u, static_cast<unsigned>(std::min<std::size_t>(total, 64)));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) {
      const std::size_t g = i / trials;
      const std::size_t t = i % trials;
      fidelities[i] = run_trial(jobs[g], derive_seed(config.noise.seed, g, t));
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back(work);
    }
  }

  // Reduction runs in trial order so the curve is schedule-independent.
  std::vector<CurvePoint> curve;
  curve.reserve(jobs.size());
  for (std::size_t g = 0; g < jobs.size(); ++g) {
    const double* f = fidelities.data() + g * trials;
    double sum = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
      sum += f[t];
    }
    const double mean = sum / static_cast<double>(trials);
    double sq = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
      sq += (f[t] - mean) * (f[t] - mean);
    }
    const double std_err =
        trials > 1 ? std::sqrt(sq / static_cast<double>(trials - 1) / static_cast<double>(trials))
                   : 0.0;
    curve.push_back({config.grid[g], mean, std_err, config.noise.trials});
  }
  return curve;
}

}  // namespace cavq
