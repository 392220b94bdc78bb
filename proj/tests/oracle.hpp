#pragma once

// Test-only reference constructions. Nothing here calls into the library's gate
// builders, so the checks that use them compare two independent routes.

#include <Eigen/Dense>

#include <complex>
#include <random>

namespace oracle {

using cd = std::complex<double>;

inline Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}
inline Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd m;
  m << 0, cd(0, -1), cd(0, 1), 0;
  return m;
}
inline Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

/// exp(A) by scaling and squaring of a truncated Taylor series.
template <typename Matrix>
Matrix expm(const Matrix& a) {
  int squarings = 0;
  double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  while (norm > 0.5) {
    norm /= 2.0;
    ++squarings;
  }
  const Matrix scaled = a / std::pow(2.0, squarings);
  Matrix term = Matrix::Identity(a.rows(), a.cols());
  Matrix sum = term;
  for (int k = 1; k < 30; ++k) {
    term = term * scaled / static_cast<double>(k);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) {
    sum = sum * sum;
  }
  return sum;
}

/// exp(-i angle/2 * generator)
inline Eigen::Matrix2cd rotation(double angle, const Eigen::Matrix2cd& generator) {
  return expm<Eigen::Matrix2cd>(cd(0, -0.5 * angle) * generator);
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// I x .. x U x .. x I with arm 0 as the rightmost (least significant) factor.
inline Eigen::MatrixXcd embed_single(const Eigen::Matrix2cd& u, int arm, int num_arms) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (int a = num_arms - 1; a >= 0; --a) {
    out = kron(out, a == arm ? Eigen::MatrixXcd(u) : Eigen::MatrixXcd::Identity(2, 2));
  }
  return out;
}

/// Full 2^M matrix of a 4x4 gate on (first, second), local index 2*b_first + b_second,
/// built element by element.
inline Eigen::MatrixXcd embed_pair(const Eigen::Matrix4cd& u, int first, int second, int num_arms) {
  const Eigen::Index dim = Eigen::Index{1} << num_arms;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  const Eigen::Index rest_mask = ~((Eigen::Index{1} << first) | (Eigen::Index{1} << second));
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      if ((r & rest_mask) != (c & rest_mask)) continue;
      const int lr = static_cast<int>(2 * ((r >> first) & 1) + ((r >> second) & 1));
      const int lc = static_cast<int>(2 * ((c >> first) & 1) + ((c >> second) & 1));
      out(r, c) = u(lr, lc);
    }
  }
  return out;
}

/// Haar-ish random unitary from the QR factorization of a complex Gaussian matrix.
inline Eigen::MatrixXcd random_unitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd z(dim, dim);
  for (Eigen::Index i = 0; i < z.size(); ++i) z(i) = cd(g(rng), g(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < dim; ++k) {
    q.col(k) *= r(k, k) / std::abs(r(k, k));
  }
  return q;
}

inline Eigen::VectorXcd random_state(int num_arms, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(Eigen::Index{1} << num_arms);
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = cd(g(rng), g(rng));
  return v.normalized();
}

}  // namespace oracle
