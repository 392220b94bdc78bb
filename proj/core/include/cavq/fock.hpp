#pragma once

// Truncated multi-mode Fock space used as an independent check of the qubit-level
// gates. Mode 0 is the least significant digit of the joint basis index.

#include "cavq/polarization.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cavq {

class FockSpace {
 public:
  static constexpr std::size_t kMaxDimension = 1'000'000;

  /// Throws ValidationError if n_max < 1, num_modes < 1 or (n_max+1)^num_modes > 10^6.
  FockSpace(int n_max, int num_modes);

  int n_max() const { return n_max_; }
  int num_modes() const { return num_modes_; }
  std::size_t dimension() const { return dimension_; }

  std::size_t index(std::span<const int> occupations) const;
  std::vector<int> occupations(std::size_t index) const;
  int occupation(std::size_t index, int mode) const;

  friend bool operator==(const FockSpace&, const FockSpace&) = default;

 private:
  int n_max_;
  int num_modes_;
  std::size_t dimension_;
};

using SparseMatrix = Eigen::SparseMatrix<std::complex<double>>;

class FockOperator {
 public:
  FockOperator(FockSpace space, SparseMatrix matrix, std::vector<std::string> labels = {});

  const FockSpace& space() const { return space_; }
  const SparseMatrix& matrix() const { return matrix_; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool is_diagonal(double tolerance = 0.0) const;
  /// Entry (k, k).
  std::complex<double> diagonal(std::size_t k) const;
  FockOperator adjoint() const;

  friend FockOperator operator*(const FockOperator& a, const FockOperator& b);
  friend FockOperator operator+(const FockOperator& a, const FockOperator& b);
  friend FockOperator operator-(const FockOperator& a, const FockOperator& b);

 private:
  FockSpace space_;
  SparseMatrix matrix_;
  std::vector<std::string> labels_;
};

using FockState = Eigen::VectorXcd;

FockOperator identity_operator(const FockSpace& space);
FockOperator annihilation(const FockSpace& space, int mode);
FockOperator creation(const FockSpace& space, int mode);

/// N_k: eigenvalue n on |n> of mode k. Throws IndexError for a bad mode.
FockOperator number_operator(const FockSpace& space, int mode);

/// Sum of N_k over a non-empty mode set. Throws ValidationError for an empty set.
FockOperator bundle_number(const FockSpace& space, std::span<const int> modes);

/// Diagonal exp(i phi n_a n_b), with n_a, n_b the total occupations of two disjoint
/// mode sets. Throws ValidationError if the sets overlap or are empty.
FockOperator kerr_unitary(const FockSpace& space, double phi, std::span<const int> modes_a,
                          std::span<const int> modes_b);

struct DualRailArm {
  int h_mode = 0;
  int v_mode = 1;
};

/// Logical |0> = one photon in H, |1> = one photon in V, per arm.
struct DualRailEncoding {
  std::vector<DualRailArm> arms;

  /// Arms (0,1), (2,3), ... for `num_arms` arms.
  static DualRailEncoding consecutive(int num_arms);
  /// All modes of the encoding, V modes only.
  std::vector<int> v_modes() const;
};

/// Joint-space basis index of a logical bitstring; arm a reads bit a.
std::size_t encoded_index(const FockSpace& space, const DualRailEncoding& encoding,
                          std::uint64_t bits);

/// Project a two-arm operator onto |00>, |01>, |10>, |11> (label b_arm0 b_arm1).
/// Throws LeakageError if U couples encoded states to anything else beyond 1e-12.
Matrix4 restrict_to_qubits(const FockOperator& u, const DualRailEncoding& encoding);

FockState fock_basis_state(const FockSpace& space, std::span<const int> occupations);

/// Map a qubit register onto the dual-rail subspace.
FockState encode_register(const FockSpace& space, const DualRailEncoding& encoding,
                          const RegisterState& state);

/// <N_H - N_V> for one arm. Throws ValidationError if |norm - 1| > 1e-8.
double stokes_expectation(const FockSpace& space, const FockState& state, const DualRailArm& arm);

}  // namespace cavq
