#pragma once

// Small helpers for comparing dense complex matrices.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>

namespace cavq {

/// max |(U^dagger U - I)_ij|
template <typename Derived>
double unitarity_error(const Eigen::MatrixBase<Derived>& u) {
  const auto n = u.rows();
  const Eigen::MatrixXcd gram = u.adjoint() * u;
  return (gram - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
}

template <typename A, typename B>
double max_abs_diff(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// 1 - |tr(A^dagger B)| / d. Zero iff A and B agree up to a global phase (for unitaries).
template <typename A, typename B>
double phase_distance(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  const double d = static_cast<double>(a.rows());
  const std::complex<double> overlap = (a.adjoint() * b).trace();
  return std::max(0.0, 1.0 - std::abs(overlap) / d);
}

/// Elementwise distance after rotating A onto B by the best global phase.
/// Unlike phase_distance this is linear in the perturbation, so it suits tight tolerances.
template <typename A, typename B>
double max_abs_diff_up_to_phase(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  const std::complex<double> overlap = (a.adjoint() * b).trace();
  const std::complex<double> phase =
      std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : std::complex<double>(1.0, 0.0);
  return (phase * a - b).cwiseAbs().maxCoeff();
}

}  // namespace cavq
