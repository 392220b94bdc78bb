#pragma once

// Monte Carlo fidelity of the accumulated HPH circuit under per-transit
// Gaussian angle noise.

#include "cavq/constants.hpp"
#include "cavq/transit.hpp"

#include <cstdint>
#include <vector>

namespace cavq {

enum class SweepKind {
  Sigma,        // grid holds noise std deviations; reflections fixed
  Reflections,  // grid holds reflections per stage; sigma fixed
};

struct SweepConfig {
  SweepKind kind = SweepKind::Sigma;
  std::vector<double> grid;
  double phi = kPi / 2.0;
  /// Element transits per accumulated stage (K * p). Must be divisible by passes.
  std::int64_t reflections = 3000;
  int passes_per_round_trip = 2;
  /// sigma used by a reflection sweep; ignored for a sigma sweep.
  double sigma = 4e-4;
  NoiseConfig noise;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

struct CurvePoint {
  double param = 0.0;
  double mean_fidelity = 0.0;
  double std_err = 0.0;
  int trials = 0;
};

/// One CurvePoint per grid value. Trial t of grid point g draws from
/// derive_seed(noise.seed, g, t), so the curve does not depend on thread count.
std::vector<CurvePoint> monte_carlo_fidelity(const SweepConfig& config);

/// Noiseless HPH output on |0>, the reference state of the sweep.
RegisterState hph_reference_state(double phi, int round_trips_per_stage, int passes);

}  // namespace cavq
