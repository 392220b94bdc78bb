#include "cavq/entanglement.hpp"

#include "cavq/errors.hpp"

#include <cmath>
#include <complex>
#include <string>

namespace cavq {
namespace {

void check_pair(const RegisterState& state, int i, int j) {
  const int m = state.num_arms();
  if (i < 0 || i >= m || j < 0 || j >= m) {
    throw IndexError("arm index out of range for " + std::to_string(m) + " arms");
  }
  if (i == j) {
    throw IndexError("two-qubit gate needs distinct arms");
  }
}

}  // namespace

double conditional_phase(const CouplingConfig& config) {
  if (config.tau_int < 0.0) {
    throw DomainError("interaction time must be non-negative");
  }
  return config.chi * config.tau_int;
}

double accumulate_phase(double phi0, std::int64_t round_trips) {
  if (round_trips < 0) {
    throw DomainError("round-trip count must be non-negative");
  }
  return static_cast<double>(round_trips) * phi0;
}

Matrix4 cp_gate(double phi) {
  if (!std::isfinite(phi)) {
    throw DomainError("phi must be finite");
  }
  Matrix4 u = Matrix4::Identity();
  u(3, 3) = std::polar(1.0, phi);
  return u;
}

Matrix4 cz_gate() {
  Matrix4 u = Matrix4::Identity();
  u(3, 3) = -1.0;
  return u;
}

RegisterState apply_cp(const RegisterState& state, int i, int j, double phi) {
  check_pair(state, i, j);
  if (!std::isfinite(phi)) {
    throw DomainError("phi must be finite");
  }
  const Eigen::Index mask = (Eigen::Index{1} << i) | (Eigen::Index{1} << j);
  const std::complex<double> phase = std::polar(1.0, phi);
  Eigen::VectorXcd out = state.amplitudes();
  for (Eigen::Index k = 0; k < out.size(); ++k) {
    if ((k & mask) == mask) {
      out(k) *= phase;
    }
  }
  return RegisterState::from_amplitudes(state.num_arms(), std::move(out));
}

RegisterState apply_cz(const RegisterState& state, int i, int j) {
  check_pair(state, i, j);
  const Eigen::Index mask = (Eigen::Index{1} << i) | (Eigen::Index{1} << j);
  Eigen::VectorXcd out = state.amplitudes();
  for (Eigen::Index k = 0; k < out.size(); ++k) {
    if ((k & mask) == mask) {
      out(k) = -out(k);
    }
  }
  return RegisterState::from_amplitudes(state.num_arms(), std::move(out));
}

RegisterState cnot(const RegisterState& state, int control, int target) {
  check_pair(state, control, target);
  const SingleQubitUnitary h = hadamard();
  RegisterState s = apply_single(state, target, h);
  s = apply_cz(s, control, target);
  return apply_single(s, target, h);
}

PairwisePhaseMatrix::PairwisePhaseMatrix(Eigen::MatrixXd phases) : phases_(std::move(phases)) {
  if (phases_.rows() != phases_.cols() || phases_.rows() < 1) {
    throw ValidationError("phase matrix must be square and non-empty");
  }
  if (phases_.rows() > RegisterState::kMaxArms) {
    throw ValidationError("phase matrix has more arms than supported");
  }
  if (!phases_.allFinite()) {
    throw ValidationError("phase matrix has non-finite entries");
  }
  for (Eigen::Index i = 0; i < phases_.rows(); ++i) {
    if (std::abs(phases_(i, i)) > kTolerance) {
      throw ValidationError("phase matrix diagonal must be zero (entry " + std::to_string(i) +
                            ")");
    }
    for (Eigen::Index j = i + 1; j < phases_.cols(); ++j) {
      if (std::abs(phases_(i, j) - phases_(j, i)) > kTolerance) {
        throw ValidationError("phase matrix must be symmetric (entries " + std::to_string(i) +
                              "," + std::to_string(j) + ")");
      }
    }
  }
}

PairwisePhaseMatrix PairwisePhaseMatrix::homogeneous(int num_arms, double phi) {
  if (num_arms < 1) {
    throw ValidationError("need at least one arm");
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Constant(num_arms, num_arms, phi);
  m.diagonal().setZero();
  return PairwisePhaseMatrix(std::move(m));
}

PairwisePhaseMatrix PairwisePhaseMatrix::from_couplings(const Eigen::MatrixXd& chi,
                                                        double tau_int) {
  if (tau_int < 0.0) {
    throw DomainError("interaction time must be non-negative");
  }
  return PairwisePhaseMatrix(chi * tau_int);
}

Eigen::VectorXcd ea_unitary(const PairwisePhaseMatrix& phases) {
  const int m = phases.num_arms();
  const Eigen::Index dim = Eigen::Index{1} << m;
  Eigen::VectorXcd diag(dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    double phase = 0.0;
    for (int i = 0; i < m; ++i) {
      if (((b >> i) & 1) == 0) {
        continue;
      }
      for (int j = i + 1; j < m; ++j) {
        if ((b >> j) & 1) {
          phase += phases(i, j);
        }
      }
    }
    diag(b) = std::polar(1.0, phase);
  }
  return diag;
}

RegisterState apply_ea(const RegisterState& state, const PairwisePhaseMatrix& phases) {
  if (phases.num_arms() != state.num_arms()) {
    throw ValidationError("phase matrix size does not match the register");
  }
  return apply_diagonal(state, ea_unitary(phases));
}

}  // namespace cavq
