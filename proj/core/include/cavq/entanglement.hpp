#pragma once

// Cross-Kerr entangling gates at the qubit level: controlled phase, CZ, CNOT and
// the all-pairs phase of the entanglement area.

#include "cavq/polarization.hpp"

#include <Eigen/Dense>

#include <cstdint>

namespace cavq {

struct CouplingConfig {
  double chi = 0.0;      // effective coupling, rad/s
  double tau_int = 0.0;  // interaction time, s
};

/// phi = chi * tau. Throws DomainError for negative tau.
double conditional_phase(const CouplingConfig& config);

/// phi_eff = K * phi0. Throws DomainError for K < 0.
double accumulate_phase(double phi0, std::int64_t round_trips);

/// diag(1, 1, 1, e^{i phi}) on |00>, |01>, |10>, |11>.
Matrix4 cp_gate(double phi);

/// diag(1, 1, 1, -1)
Matrix4 cz_gate();

RegisterState apply_cp(const RegisterState& state, int i, int j, double phi);
RegisterState apply_cz(const RegisterState& state, int i, int j);

/// H on target, CZ, H on target. Throws IndexError for equal or out-of-range arms.
RegisterState cnot(const RegisterState& state, int control, int target);

/// Symmetric, zero-diagonal matrix of conditional phases phi_ij.
class PairwisePhaseMatrix {
 public:
  static constexpr double kTolerance = 1e-12;

  /// Throws ValidationError if the matrix is not square, symmetric and zero on the diagonal.
  explicit PairwisePhaseMatrix(Eigen::MatrixXd phases);

  /// Every pair coupled with the same phase (homogeneous overlap).
  static PairwisePhaseMatrix homogeneous(int num_arms, double phi);

  /// phi_ij = chi_ij * tau for a coupling matrix chi.
  static PairwisePhaseMatrix from_couplings(const Eigen::MatrixXd& chi, double tau_int);

  int num_arms() const { return static_cast<int>(phases_.rows()); }
  double operator()(int i, int j) const { return phases_(i, j); }
  const Eigen::MatrixXd& matrix() const { return phases_; }

 private:
  Eigen::MatrixXd phases_;
};

/// Diagonal of the 2^M unitary: entry b is exp(i sum_{i<j} phi_ij b_i b_j).
Eigen::VectorXcd ea_unitary(const PairwisePhaseMatrix& phases);

RegisterState apply_ea(const RegisterState& state, const PairwisePhaseMatrix& phases);

}  // namespace cavq
