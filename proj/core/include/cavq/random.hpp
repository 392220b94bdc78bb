#pragma once

#include <cstdint>
#include <random>

namespace cavq {

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Counter-based sub-seed for (seed, grid point, trial). Trials seeded this way are
/// independent of the order in which they run.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t grid_index,
                                    std::uint64_t trial) {
  return mix64(mix64(mix64(seed) ^ grid_index) ^ trial);
}

/// Seeded Gaussian source for per-transit angle noise.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed = 0) : engine_(seed) {}

  double gaussian(double sigma) { return sigma * normal_(engine_); }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace cavq
