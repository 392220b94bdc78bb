#pragma once

// Longitudinal mode comb of a linear cavity (L = q lambda / 2) and harmonic
// bundle selection.

#include <cstdint>
#include <vector>

namespace cavq {

struct CavityGeometry {
  double length_m = 0.0;
};

struct ModeEntry {
  std::int64_t q = 0;
  double omega_rad_s = 0.0;
  double nu_hz = 0.0;
};

struct ModeComb {
  std::vector<ModeEntry> entries;
};

/// A harmonic bundle: the longitudinal modes carrying one arm's field.
struct Bundle {
  int arm_id = 0;
  std::vector<std::int64_t> mode_indices;  // sorted, non-empty
};

/// omega_q = q pi c / L. Throws DomainError for q < 1 or a non-positive length.
double mode_frequency(const CavityGeometry& geometry, std::int64_t q);

/// nu_q = q c / (2L).
double mode_frequency_hz(const CavityGeometry& geometry, std::int64_t q);

/// c / (2L)
double free_spectral_range(const CavityGeometry& geometry);

/// Entries for q in [first_q, last_q].
ModeComb mode_comb(const CavityGeometry& geometry, std::int64_t first_q, std::int64_t last_q);

ModeComb mode_comb(const CavityGeometry& geometry, const Bundle& bundle);

/// All q with |nu_q - center_hz| <= bandwidth_hz / 2 (closed interval).
/// Throws NoModeInBand when nothing qualifies.
Bundle select_bundle(const CavityGeometry& geometry, double center_hz, double bandwidth_hz,
                     int arm_id = 0);

}  // namespace cavq
