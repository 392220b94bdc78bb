#pragma once

// Polarization-qubit register: |0> = |H>, |1> = |V> per arm, arm i stored in
// bit i of the amplitude index (arm 0 least significant).

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <cstdint>

namespace cavq {

using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;

/// 2x2 unitary acting on one polarization qubit. Construction checks U^dagger U = I
/// within 1e-10 and throws ValidationError otherwise.
class SingleQubitUnitary {
 public:
  static constexpr double kTolerance = 1e-10;

  SingleQubitUnitary() : matrix_(Matrix2::Identity()) {}
  explicit SingleQubitUnitary(const Matrix2& matrix);

  const Matrix2& matrix() const { return matrix_; }
  std::complex<double> operator()(int row, int col) const { return matrix_(row, col); }

  SingleQubitUnitary adjoint() const;

  friend SingleQubitUnitary operator*(const SingleQubitUnitary& a, const SingleQubitUnitary& b);

 private:
  Matrix2 matrix_;
};

/// Angles of U(phi, theta, lambda) = Rz(phi) Rperp(theta, 0) Rz(lambda).
/// Canonical ranges: phi, lambda in [0, 2pi), theta in [0, pi].
struct EulerAngles {
  double phi = 0.0;
  double theta = 0.0;
  double lambda = 0.0;
};

struct EulerDecomposition {
  EulerAngles angles;
  double global_phase = 0.0;  // U = exp(i global_phase) * euler_compose(angles)
};

/// exp(-i phi sigma_z / 2) = diag(e^{-i phi/2}, e^{i phi/2})
SingleQubitUnitary rz(double phi);

/// exp(-i theta/2 (cos(gamma) sigma_x + sin(gamma) sigma_y))
SingleQubitUnitary rperp(double theta, double gamma);

SingleQubitUnitary euler_compose(const EulerAngles& angles);

/// Inverse of euler_compose up to global phase. At gimbal lock (theta within 1e-9
/// of 0 or pi) lambda is pinned to 0 and the whole z rotation goes into phi.
EulerDecomposition euler_decompose(const SingleQubitUnitary& u);

/// Same, for an unchecked matrix. Throws ValidationError if it is not unitary within 1e-10.
EulerDecomposition euler_decompose(const Matrix2& u);

/// The standard Hadamard, equal to i * euler_compose({pi/2, pi/2, pi/2}).
SingleQubitUnitary hadamard();

/// diag(1, e^{i phi})
SingleQubitUnitary phase_gate(double phi);

class RegisterState {
 public:
  static constexpr int kMaxArms = 12;
  static constexpr double kNormTolerance = 1e-10;

  /// |0...0>, every arm horizontally polarized.
  static RegisterState zero(int num_arms);
  static RegisterState basis(int num_arms, std::uint64_t index);
  /// Throws ValidationError on a wrong dimension or a norm off by more than 1e-10.
  static RegisterState from_amplitudes(int num_arms, Eigen::VectorXcd amplitudes);

  int num_arms() const { return num_arms_; }
  std::size_t dimension() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  std::complex<double> amplitude(std::size_t index) const {
    return amplitudes_(static_cast<Eigen::Index>(index));
  }
  double probability(std::size_t index) const { return std::norm(amplitude(index)); }
  double norm() const { return amplitudes_.norm(); }

 private:
  RegisterState(int num_arms, Eigen::VectorXcd amplitudes)
      : num_arms_(num_arms), amplitudes_(std::move(amplitudes)) {}

  int num_arms_ = 1;
  Eigen::VectorXcd amplitudes_;
};

/// I x ... x U x ... x I with U on `arm`. Throws IndexError for a bad arm.
RegisterState apply_single(const RegisterState& state, int arm, const SingleQubitUnitary& u);

/// 4x4 operator on (first, second) in the local basis |b_first b_second>, index 2*b_first + b_second.
RegisterState apply_two(const RegisterState& state, int first, int second, const Matrix4& u);

/// Multiply amplitude k by diagonal(k).
RegisterState apply_diagonal(const RegisterState& state, const Eigen::VectorXcd& diagonal);

/// |<a|b>|^2, clamped to [0, 1]. Throws ValidationError on a dimension mismatch.
double state_fidelity(const RegisterState& a, const RegisterState& b);

/// <Z_arm> = P(b_arm = 0) - P(b_arm = 1), the qubit-level Stokes readout.
double expect_z(const RegisterState& state, int arm);

}  // namespace cavq
