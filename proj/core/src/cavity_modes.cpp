#include "cavq/cavity_modes.hpp"

#include "cavq/constants.hpp"
#include "cavq/errors.hpp"

#include <cmath>
#include <string>

namespace cavq {
namespace {

void check_geometry(const CavityGeometry& geometry) {
  if (!(geometry.length_m > 0.0) || !std::isfinite(geometry.length_m)) {
    throw DomainError("cavity length must be positive and finite, got " +
                      std::to_string(geometry.length_m));
  }
}

void check_index(std::int64_t q) {
  if (q < 1) {
    throw DomainError("longitudinal mode index must be >= 1, got " + std::to_string(q));
  }
}

}  // namespace

double mode_frequency(const CavityGeometry& geometry, std::int64_t q) {
  check_geometry(geometry);
  check_index(q);
  return static_cast<double>(q) * kPi * kSpeedOfLight / geometry.length_m;
}

double mode_frequency_hz(const CavityGeometry& geometry, std::int64_t q) {
  check_geometry(geometry);
  check_index(q);
  return static_cast<double>(q) * kSpeedOfLight / (2.0 * geometry.length_m);
}

double free_spectral_range(const CavityGeometry& geometry) {
  check_geometry(geometry);
  return kSpeedOfLight / (2.0 * geometry.length_m);
}

ModeComb mode_comb(const CavityGeometry& geometry, std::int64_t first_q, std::int64_t last_q) {
  check_index(first_q);
  if (last_q < first_q) {
    throw DomainError("mode range is empty");
  }
  ModeComb comb;
  comb.entries.reserve(static_cast<std::size_t>(last_q - first_q + 1));
  for (std::int64_t q = first_q; q <= last_q; ++q) {
    comb.entries.push_back({q, mode_frequency(geometry, q), mode_frequency_hz(geometry, q)});
  }
  return comb;
}

ModeComb mode_comb(const CavityGeometry& geometry, const Bundle& bundle) {
  ModeComb comb;
  comb.entries.reserve(bundle.mode_indices.size());
  for (std::int64_t q : bundle.mode_indices) {
    comb.entries.push_back({q, mode_frequency(geometry, q), mode_frequency_hz(geometry, q)});
  }
  return comb;
}

Bundle select_bundle(const CavityGeometry& geometry, double center_hz, double bandwidth_hz,
                     int arm_id) {
  const double fsr = free_spectral_range(geometry);
  if (!(center_hz > 0.0) || !std::isfinite(center_hz)) {
    throw DomainError("band center must be positive and finite");
  }
  if (!(bandwidth_hz >= 0.0) || !std::isfinite(bandwidth_hz)) {
    throw DomainError("bandwidth must be non-negative and finite");
  }
  const double half = 0.5 * bandwidth_hz;

  // Candidate range from the FSR grid, padded by one on each side; membership is
  // then decided on the same nu_q values the comb reports.
  const auto lo = static_cast<std::int64_t>(std::floor((center_hz - half) / fsr)) - 1;
  const auto hi = static_cast<std::int64_t>(std::ceil((center_hz + half) / fsr)) + 1;

  Bundle bundle;
  bundle.arm_id = arm_id;
  for (std::int64_t q = std::max<std::int64_t>(lo, 1); q <= hi; ++q) {
    if (std::abs(mode_frequency_hz(geometry, q) - center_hz) <= half) {
      bundle.mode_indices.push_back(q);
    }
  }
  if (bundle.mode_indices.empty()) {
    throw NoModeInBand("no mode in band");
  }
  return bundle;
}

}  // namespace cavq
