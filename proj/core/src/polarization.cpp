#include "cavq/polarization.hpp"

#include "cavq/constants.hpp"
#include "cavq/errors.hpp"
#include "cavq/linalg.hpp"

#include <cmath>
#include <string>

namespace cavq {
namespace {

using cd = std::complex<double>;

constexpr double kGimbalTolerance = 1e-9;

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw DomainError(std::string(name) + " must be finite");
  }
}

// Map x into [0, 2pi); returns the number of 2pi turns removed.
long long wrap_turns(double& x) {
  const double turns = std::floor(x / kTwoPi);
  x -= turns * kTwoPi;
  if (x >= kTwoPi) {  // x was a hair below a multiple of 2pi
    x -= kTwoPi;
    return static_cast<long long>(turns) + 1;
  }
  return static_cast<long long>(turns);
}

double wrap_symmetric(double x) {
  x = std::remainder(x, kTwoPi);
  return x <= -kPi ? x + kTwoPi : x;
}

void check_arm(const RegisterState& state, int arm) {
  if (arm < 0 || arm >= state.num_arms()) {
    throw IndexError("arm " + std::to_string(arm) + " out of range for " +
                     std::to_string(state.num_arms()) + " arms");
  }
}

}  // namespace

SingleQubitUnitary::SingleQubitUnitary(const Matrix2& matrix) : matrix_(matrix) {
  if (!matrix_.allFinite()) {
    throw ValidationError("matrix has non-finite entries");
  }
  if (unitarity_error(matrix_) > kTolerance) {
    throw ValidationError("matrix is not unitary");
  }
}

SingleQubitUnitary SingleQubitUnitary::adjoint() const {
  return SingleQubitUnitary(Matrix2(matrix_.adjoint()));
}

SingleQubitUnitary operator*(const SingleQubitUnitary& a, const SingleQubitUnitary& b) {
  return SingleQubitUnitary(Matrix2(a.matrix_ * b.matrix_));
}

SingleQubitUnitary rz(double phi) {
  require_finite(phi, "phi");
  Matrix2 m;
  m << std::polar(1.0, -0.5 * phi), 0.0, 0.0, std::polar(1.0, 0.5 * phi);
  return SingleQubitUnitary(m);
}

SingleQubitUnitary rperp(double theta, double gamma) {
  require_finite(theta, "theta");
  require_finite(gamma, "gamma");
  // exp(-i t n.sigma) = cos t I - i sin t (n.sigma), t = theta/2, n = (cos g, sin g, 0)
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const cd off = cd(0.0, -s) * std::polar(1.0, -gamma);  // -i s (cos g - i sin g)
  const cd off_lower = cd(0.0, -s) * std::polar(1.0, gamma);
  Matrix2 m;
  m << c, off, off_lower, c;
  return SingleQubitUnitary(m);
}

SingleQubitUnitary euler_compose(const EulerAngles& angles) {
  return rz(angles.phi) * rperp(angles.theta, 0.0) * rz(angles.lambda);
}

EulerDecomposition euler_decompose(const SingleQubitUnitary& u) {
  const Matrix2& m = u.matrix();
  // Rz(phi) Rx(theta) Rz(lambda) =
  //   [ e^{-i(phi+lambda)/2} c        -i e^{-i(phi-lambda)/2} s ]
  //   [ -i e^{i(phi-lambda)/2} s       e^{i(phi+lambda)/2} c    ]
  const double theta = 2.0 * std::atan2(std::abs(m(1, 0)), std::abs(m(0, 0)));

  double phi = 0.0;
  double lambda = 0.0;
  if (theta < kGimbalTolerance) {
    phi = std::arg(m(1, 1)) - std::arg(m(0, 0));
  } else if (theta > kPi - kGimbalTolerance) {
    phi = std::arg(m(1, 0)) - std::arg(m(0, 1));
  } else {
    const double sum = std::arg(m(1, 1)) - std::arg(m(0, 0));
    const double diff = std::arg(m(1, 0)) - std::arg(m(0, 1));
    phi = 0.5 * (sum + diff);
    lambda = 0.5 * (sum - diff);
    // sum and diff are only known mod 2pi; the other branch shifts both angles by pi.
    const auto overlap_with = [&](double shift) {
      return std::abs(
          (euler_compose({phi + shift, theta, lambda + shift}).matrix().adjoint() * m).trace());
    };
    if (overlap_with(kPi) > overlap_with(0.0)) {
      phi += kPi;
      lambda += kPi;
    }
  }
  wrap_turns(phi);
  wrap_turns(lambda);

  EulerDecomposition out;
  out.angles = {phi, theta, lambda};
  // Fix the global phase against the recomposed matrix; this absorbs the sign flips
  // that 2pi wraps of phi and lambda introduce.
  const cd overlap = (euler_compose(out.angles).matrix().adjoint() * m).trace();
  out.global_phase = wrap_symmetric(std::arg(overlap));
  if (std::abs(out.global_phase) < 1e-15) {
    out.global_phase = 0.0;
  }
  return out;
}

EulerDecomposition euler_decompose(const Matrix2& u) {
  return euler_decompose(SingleQubitUnitary(u));
}

SingleQubitUnitary hadamard() {
  const double r = 1.0 / std::sqrt(2.0);
  Matrix2 m;
  m << r, r, r, -r;
  return SingleQubitUnitary(m);
}

SingleQubitUnitary phase_gate(double phi) {
  require_finite(phi, "phi");
  Matrix2 m;
  m << 1.0, 0.0, 0.0, std::polar(1.0, phi);
  return SingleQubitUnitary(m);
}

RegisterState RegisterState::zero(int num_arms) { return basis(num_arms, 0); }

RegisterState RegisterState::basis(int num_arms, std::uint64_t index) {
  if (num_arms < 1 || num_arms > kMaxArms) {
    throw ValidationError("number of arms must be in [1, " + std::to_string(kMaxArms) + "]");
  }
  const auto dim = Eigen::Index{1} << num_arms;
  if (index >= static_cast<std::uint64_t>(dim)) {
    throw IndexError("basis index out of range");
  }
  Eigen::VectorXcd amplitudes = Eigen::VectorXcd::Zero(dim);
  amplitudes(static_cast<Eigen::Index>(index)) = 1.0;
  return RegisterState(num_arms, std::move(amplitudes));
}

RegisterState RegisterState::from_amplitudes(int num_arms, Eigen::VectorXcd amplitudes) {
  if (num_arms < 1 || num_arms > kMaxArms) {
    throw ValidationError("number of arms must be in [1, " + std::to_string(kMaxArms) + "]");
  }
  if (amplitudes.size() != (Eigen::Index{1} << num_arms)) {
    throw ValidationError("amplitude vector must have 2^M entries");
  }
  if (!amplitudes.allFinite() || std::abs(amplitudes.squaredNorm() - 1.0) > kNormTolerance) {
    throw ValidationError("register state must have unit norm");
  }
  return RegisterState(num_arms, std::move(amplitudes));
}

RegisterState apply_single(const RegisterState& state, int arm, const SingleQubitUnitary& u) {
  check_arm(state, arm);
  const Matrix2& m = u.matrix();
  Eigen::VectorXcd out = state.amplitudes();
  const Eigen::Index stride = Eigen::Index{1} << arm;
  const Eigen::Index dim = out.size();
  for (Eigen::Index base = 0; base < dim; base += 2 * stride) {
    for (Eigen::Index k = base; k < base + stride; ++k) {
      const cd a0 = out(k);
      const cd a1 = out(k + stride);
      out(k) = m(0, 0) * a0 + m(0, 1) * a1;
      out(k + stride) = m(1, 0) * a0 + m(1, 1) * a1;
    }
  }
  return RegisterState::from_amplitudes(state.num_arms(), std::move(out));
}

RegisterState apply_two(const RegisterState& state, int first, int second, const Matrix4& u) {
  check_arm(state, first);
  check_arm(state, second);
  if (first == second) {
    throw IndexError("two-qubit operation needs distinct arms");
  }
  if (unitarity_error(u) > SingleQubitUnitary::kTolerance) {
    throw ValidationError("two-qubit matrix is not unitary");
  }
  const Eigen::Index bit_first = Eigen::Index{1} << first;
  const Eigen::Index bit_second = Eigen::Index{1} << second;
  const Eigen::VectorXcd& in = state.amplitudes();
  Eigen::VectorXcd out = in;
  for (Eigen::Index k = 0; k < in.size(); ++k) {
    if ((k & bit_first) != 0 || (k & bit_second) != 0) {
      continue;
    }
    const Eigen::Index idx[4] = {k, k | bit_second, k | bit_first, k | bit_first | bit_second};
    for (int r = 0; r < 4; ++r) {
      cd acc = 0.0;
      for (int c = 0; c < 4; ++c) {
        acc += u(r, c) * in(idx[c]);
      }
      out(idx[r]) = acc;
    }
  }
  return RegisterState::from_amplitudes(state.num_arms(), std::move(out));
}

RegisterState apply_diagonal(const RegisterState& state, const Eigen::VectorXcd& diagonal) {
  if (diagonal.size() != state.amplitudes().size()) {
    throw ValidationError("diagonal operator dimension does not match the register");
  }
  Eigen::VectorXcd out = state.amplitudes().cwiseProduct(diagonal);
  return RegisterState::from_amplitudes(state.num_arms(), std::move(out));
}

double state_fidelity(const RegisterState& a, const RegisterState& b) {
  if (a.dimension() != b.dimension()) {
    throw ValidationError("fidelity of registers with different dimensions");
  }
  if (a.amplitudes() == b.amplitudes()) {
    return 1.0;
  }
  const double f = std::norm(a.amplitudes().dot(b.amplitudes()));
  return std::clamp(f, 0.0, 1.0);
}

double expect_z(const RegisterState& state, int arm) {
  check_arm(state, arm);
  const Eigen::Index bit = Eigen::Index{1} << arm;
  double z = 0.0;
  for (Eigen::Index k = 0; k < state.amplitudes().size(); ++k) {
    const double p = std::norm(state.amplitudes()(k));
    z += (k & bit) ? -p : p;
  }
  return z;
}

}  // namespace cavq
