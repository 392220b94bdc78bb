#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cavq {

struct OracleCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct OracleOptions {
  int n_max = 4;
  int random_phases = 20;
  std::uint64_t seed = 20240611;
  /// Test hook: build the Kerr propagator with the opposite sign so the equivalence fails.
  bool inject_sign_flip = false;
};

/// Fock-space vs qubit-level equivalence checks, one entry per property.
std::vector<OracleCheck> run_oracle_suite(const OracleOptions& options = {});

}  // namespace cavq
