#include "cavq/fock.hpp"

#include "cavq/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace cavq {
namespace {

using cd = std::complex<double>;
using Triplet = Eigen::Triplet<cd>;

constexpr double kLeakageTolerance = 1e-12;
constexpr double kStateNormTolerance = 1e-8;

void check_mode(const FockSpace& space, int mode) {
  if (mode < 0 || mode >= space.num_modes()) {
    throw IndexError("mode " + std::to_string(mode) + " out of range for " +
                     std::to_string(space.num_modes()) + " modes");
  }
}

std::vector<std::string> default_labels(const FockSpace& space) {
  std::vector<std::string> labels;
  for (int k = 0; k < space.num_modes(); ++k) {
    labels.push_back("mode" + std::to_string(k));
  }
  return labels;
}

SparseMatrix diagonal_matrix(const FockSpace& space, const auto& entry) {
  const auto dim = static_cast<Eigen::Index>(space.dimension());
  std::vector<Triplet> triplets;
  triplets.reserve(space.dimension());
  for (Eigen::Index k = 0; k < dim; ++k) {
    const cd v = entry(static_cast<std::size_t>(k));
    if (v != cd(0.0)) {
      triplets.emplace_back(k, k, v);
    }
  }
  SparseMatrix m(dim, dim);
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

int total_occupation(const FockSpace& space, std::size_t index, std::span<const int> modes) {
  int n = 0;
  for (int mode : modes) {
    n += space.occupation(index, mode);
  }
  return n;
}

void check_mode_set(const FockSpace& space, std::span<const int> modes, const char* what) {
  if (modes.empty()) {
    throw ValidationError(std::string(what) + " mode set is empty");
  }
  for (int mode : modes) {
    check_mode(space, mode);
  }
}

}  // namespace

FockSpace::FockSpace(int n_max, int num_modes) : n_max_(n_max), num_modes_(num_modes) {
  if (n_max < 1) {
    throw ValidationError("Fock truncation n_max must be >= 1");
  }
  if (num_modes < 1) {
    throw ValidationError("Fock space needs at least one mode");
  }
  std::size_t dim = 1;
  for (int k = 0; k < num_modes; ++k) {
    dim *= static_cast<std::size_t>(n_max + 1);
    if (dim > kMaxDimension) {
      throw ValidationError("Fock space dimension exceeds 10^6");
    }
  }
  dimension_ = dim;
}

std::size_t FockSpace::index(std::span<const int> occupations) const {
  if (static_cast<int>(occupations.size()) != num_modes_) {
    throw ValidationError("occupation list length must equal the number of modes");
  }
  std::size_t idx = 0;
  for (int k = num_modes_ - 1; k >= 0; --k) {
    const int n = occupations[static_cast<std::size_t>(k)];
    if (n < 0 || n > n_max_) {
      throw IndexError("occupation " + std::to_string(n) + " outside [0, n_max]");
    }
    idx = idx * static_cast<std::size_t>(n_max_ + 1) + static_cast<std::size_t>(n);
  }
  return idx;
}

std::vector<int> FockSpace::occupations(std::size_t index) const {
  std::vector<int> occ(static_cast<std::size_t>(num_modes_));
  for (int k = 0; k < num_modes_; ++k) {
    occ[static_cast<std::size_t>(k)] = static_cast<int>(index % static_cast<std::size_t>(n_max_ + 1));
    index /= static_cast<std::size_t>(n_max_ + 1);
  }
  return occ;
}

int FockSpace::occupation(std::size_t index, int mode) const {
  for (int k = 0; k < mode; ++k) {
    index /= static_cast<std::size_t>(n_max_ + 1);
  }
  return static_cast<int>(index % static_cast<std::size_t>(n_max_ + 1));
}

FockOperator::FockOperator(FockSpace space, SparseMatrix matrix, std::vector<std::string> labels)
    : space_(space), matrix_(std::move(matrix)), labels_(std::move(labels)) {
  const auto dim = static_cast<Eigen::Index>(space_.dimension());
  if (matrix_.rows() != dim || matrix_.cols() != dim) {
    throw ValidationError("operator dimension does not match its Fock space");
  }
  if (labels_.empty()) {
    labels_ = default_labels(space_);
  }
  matrix_.makeCompressed();
}

bool FockOperator::is_diagonal(double tolerance) const {
  for (Eigen::Index col = 0; col < matrix_.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(matrix_, col); it; ++it) {
      if (it.row() != it.col() && std::abs(it.value()) > tolerance) {
        return false;
      }
    }
  }
  return true;
}

cd FockOperator::diagonal(std::size_t k) const {
  const auto i = static_cast<Eigen::Index>(k);
  return matrix_.coeff(i, i);
}

FockOperator FockOperator::adjoint() const {
  return FockOperator(space_, SparseMatrix(matrix_.adjoint()), labels_);
}

FockOperator operator*(const FockOperator& a, const FockOperator& b) {
  if (!(a.space_ == b.space_)) {
    throw ValidationError("operators live on different Fock spaces");
  }
  return FockOperator(a.space_, SparseMatrix(a.matrix_ * b.matrix_), a.labels_);
}

FockOperator operator+(const FockOperator& a, const FockOperator& b) {
  if (!(a.space_ == b.space_)) {
    throw ValidationError("operators live on different Fock spaces");
  }
  return FockOperator(a.space_, SparseMatrix(a.matrix_ + b.matrix_), a.labels_);
}

FockOperator operator-(const FockOperator& a, const FockOperator& b) {
  if (!(a.space_ == b.space_)) {
    throw ValidationError("operators live on different Fock spaces");
  }
  return FockOperator(a.space_, SparseMatrix(a.matrix_ - b.matrix_), a.labels_);
}

FockOperator identity_operator(const FockSpace& space) {
  return FockOperator(space, diagonal_matrix(space, [](std::size_t) { return cd(1.0); }));
}

FockOperator annihilation(const FockSpace& space, int mode) {
  check_mode(space, mode);
  const auto dim = static_cast<Eigen::Index>(space.dimension());
  std::size_t stride = 1;
  for (int k = 0; k < mode; ++k) {
    stride *= static_cast<std::size_t>(space.n_max() + 1);
  }
  // a|n> = sqrt(n)|n-1>
  std::vector<Triplet> triplets;
  for (std::size_t col = 0; col < space.dimension(); ++col) {
    const int n = space.occupation(col, mode);
    if (n > 0) {
      triplets.emplace_back(static_cast<Eigen::Index>(col - stride),
                            static_cast<Eigen::Index>(col), cd(std::sqrt(static_cast<double>(n))));
    }
  }
  SparseMatrix m(dim, dim);
  m.setFromTriplets(triplets.begin(), triplets.end());
  return FockOperator(space, std::move(m));
}

FockOperator creation(const FockSpace& space, int mode) {
  return annihilation(space, mode).adjoint();
}

FockOperator number_operator(const FockSpace& space, int mode) {
  check_mode(space, mode);
  return FockOperator(space, diagonal_matrix(space, [&](std::size_t k) {
                        return cd(static_cast<double>(space.occupation(k, mode)));
                      }));
}

FockOperator bundle_number(const FockSpace& space, std::span<const int> modes) {
  check_mode_set(space, modes, "bundle");
  return FockOperator(space, diagonal_matrix(space, [&](std::size_t k) {
                        return cd(static_cast<double>(total_occupation(space, k, modes)));
                      }));
}

FockOperator kerr_unitary(const FockSpace& space, double phi, std::span<const int> modes_a,
                          std::span<const int> modes_b) {
  check_mode_set(space, modes_a, "first");
  check_mode_set(space, modes_b, "second");
  for (int a : modes_a) {
    if (std::find(modes_b.begin(), modes_b.end(), a) != modes_b.end()) {
      throw ValidationError("Kerr number operators must act on disjoint mode sets");
    }
  }
  if (!std::isfinite(phi)) {
    throw DomainError("phi must be finite");
  }
  return FockOperator(space, diagonal_matrix(space, [&](std::size_t k) {
                        const int na = total_occupation(space, k, modes_a);
                        const int nb = total_occupation(space, k, modes_b);
                        return std::polar(1.0, phi * static_cast<double>(na * nb));
                      }));
}

DualRailEncoding DualRailEncoding::consecutive(int num_arms) {
  DualRailEncoding enc;
  for (int a = 0; a < num_arms; ++a) {
    enc.arms.push_back({2 * a, 2 * a + 1});
  }
  return enc;
}

std::vector<int> DualRailEncoding::v_modes() const {
  std::vector<int> modes;
  for (const DualRailArm& arm : arms) {
    modes.push_back(arm.v_mode);
  }
  return modes;
}

std::size_t encoded_index(const FockSpace& space, const DualRailEncoding& encoding,
                          std::uint64_t bits) {
  std::vector<int> occ(static_cast<std::size_t>(space.num_modes()), 0);
  for (std::size_t a = 0; a < encoding.arms.size(); ++a) {
    const DualRailArm& arm = encoding.arms[a];
    check_mode(space, arm.h_mode);
    check_mode(space, arm.v_mode);
    if (arm.h_mode == arm.v_mode) {
      throw ValidationError("dual-rail arm needs two distinct modes");
    }
    const bool one = (bits >> a) & 1U;
    occ[static_cast<std::size_t>(one ? arm.v_mode : arm.h_mode)] += 1;
  }
  return space.index(occ);
}

Matrix4 restrict_to_qubits(const FockOperator& u, const DualRailEncoding& encoding) {
  if (encoding.arms.size() != 2) {
    throw ValidationError("restriction to qubits needs exactly two encoded arms");
  }
  const FockSpace& space = u.space();
  // Label b_arm0 b_arm1, i.e. local index 2*b0 + b1; arm a reads bit a of `bits`.
  std::array<Eigen::Index, 4> idx{};
  for (int local = 0; local < 4; ++local) {
    const std::uint64_t b0 = (local >> 1) & 1;
    const std::uint64_t b1 = local & 1;
    idx[static_cast<std::size_t>(local)] =
        static_cast<Eigen::Index>(encoded_index(space, encoding, b0 | (b1 << 1)));
  }
  auto encoded = [&](Eigen::Index k) { return std::find(idx.begin(), idx.end(), k) != idx.end(); };

  const SparseMatrix& m = u.matrix();
  Matrix4 out = Matrix4::Zero();
  double leak = 0.0;
  for (int c = 0; c < 4; ++c) {
    for (SparseMatrix::InnerIterator it(m, idx[static_cast<std::size_t>(c)]); it; ++it) {
      const auto pos = std::find(idx.begin(), idx.end(), it.row());
      if (pos == idx.end()) {
        leak += std::norm(it.value());
      } else {
        out(static_cast<Eigen::Index>(pos - idx.begin()), c) = it.value();
      }
    }
  }
  // Leakage into the encoded rows from outside (non-unitary U could hide it in columns).
  for (Eigen::Index col = 0; col < m.outerSize(); ++col) {
    if (encoded(col)) {
      continue;
    }
    for (SparseMatrix::InnerIterator it(m, col); it; ++it) {
      if (encoded(it.row())) {
        leak += std::norm(it.value());
      }
    }
  }
  if (std::sqrt(leak) > kLeakageTolerance) {
    throw LeakageError("operator mixes encoded and unencoded subspaces (leakage amplitude " +
                       std::to_string(std::sqrt(leak)) + ")");
  }
  return out;
}

FockState fock_basis_state(const FockSpace& space, std::span<const int> occupations) {
  FockState state = FockState::Zero(static_cast<Eigen::Index>(space.dimension()));
  state(static_cast<Eigen::Index>(space.index(occupations))) = 1.0;
  return state;
}

FockState encode_register(const FockSpace& space, const DualRailEncoding& encoding,
                          const RegisterState& state) {
  if (static_cast<int>(encoding.arms.size()) != state.num_arms()) {
    throw ValidationError("encoding arm count does not match the register");
  }
  FockState out = FockState::Zero(static_cast<Eigen::Index>(space.dimension()));
  for (std::size_t b = 0; b < state.dimension(); ++b) {
    out(static_cast<Eigen::Index>(encoded_index(space, encoding, b))) = state.amplitude(b);
  }
  return out;
}

double stokes_expectation(const FockSpace& space, const FockState& state, const DualRailArm& arm) {
  check_mode(space, arm.h_mode);
  check_mode(space, arm.v_mode);
  if (state.size() != static_cast<Eigen::Index>(space.dimension())) {
    throw ValidationError("state dimension does not match the Fock space");
  }
  if (std::abs(state.norm() - 1.0) > kStateNormTolerance) {
    throw ValidationError("Stokes expectation needs a normalized state");
  }
  double s = 0.0;
  for (Eigen::Index k = 0; k < state.size(); ++k) {
    const double p = std::norm(state(k));
    if (p == 0.0) {
      continue;
    }
    const auto idx = static_cast<std::size_t>(k);
    s += p * static_cast<double>(space.occupation(idx, arm.h_mode) - space.occupation(idx, arm.v_mode));
  }
  return s;
}

}  // namespace cavq
