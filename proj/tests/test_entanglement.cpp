#include <doctest.h>

#include "cavq/constants.hpp"
#include "cavq/entanglement.hpp"
#include "cavq/errors.hpp"
#include "cavq/linalg.hpp"
#include "oracle.hpp"

#include <random>

using namespace cavq;

TEST_CASE("conditional and accumulated phase") {
  CHECK(conditional_phase({2.0e6, 1.5e-6}) == doctest::Approx(3.0));
  CHECK(conditional_phase({2.0e6, 0.0}) == 0.0);
  CHECK_THROWS_AS(conditional_phase({1.0, -1.0}), DomainError);
  CHECK(accumulate_phase(4.53514739229e-4, 2599) == doctest::Approx(1.178684807256));
  CHECK(accumulate_phase(0.1, 0) == 0.0);
  CHECK_THROWS_AS(accumulate_phase(0.1, -1), DomainError);
}

TEST_CASE("controlled-phase and CZ matrices") {
  const Matrix4 cp = cp_gate(0.7);
  CHECK(cp.isDiagonal());
  CHECK(cp(0, 0) == std::complex<double>(1.0));
  CHECK(cp(1, 1) == std::complex<double>(1.0));
  CHECK(cp(2, 2) == std::complex<double>(1.0));
  CHECK(max_abs_diff(Eigen::Vector<std::complex<double>, 1>(cp(3, 3)),
                     Eigen::Vector<std::complex<double>, 1>(std::polar(1.0, 0.7))) < 1e-15);
  CHECK(max_abs_diff(cp_gate(kPi), cz_gate()) < 1e-15);
  CHECK(cz_gate()(3, 3) == std::complex<double>(-1.0));
}

TEST_CASE("apply_cp agrees with the embedded gate") {
  std::mt19937_64 rng(4);
  for (int m = 2; m <= 4; ++m) {
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (i == j) continue;
        const Eigen::VectorXcd psi = oracle::random_state(m, rng);
        const RegisterState s = RegisterState::from_amplitudes(m, psi);
        const Eigen::VectorXcd expected = oracle::embed_pair(cp_gate(1.3), i, j, m) * psi;
        CHECK(max_abs_diff(apply_cp(s, i, j, 1.3).amplitudes(), expected) < 1e-14);
        CHECK(max_abs_diff(apply_cp(s, i, j, 1.3).amplitudes(), apply_cp(s, j, i, 1.3).amplitudes()) <
              1e-15);
      }
    }
  }
  CHECK_THROWS_AS(apply_cz(RegisterState::zero(2), 0, 0), IndexError);
  CHECK_THROWS_AS(apply_cz(RegisterState::zero(2), 0, 2), IndexError);
}

TEST_CASE("CNOT truth table and involution") {
  Eigen::Matrix4cd truth = Eigen::Matrix4cd::Zero();
  // control = first (high local bit), target = second
  truth(0, 0) = truth(1, 1) = 1.0;
  truth(2, 3) = truth(3, 2) = 1.0;
  const int control = 1;
  const int target = 0;
  Eigen::MatrixXcd built(4, 4);
  for (int k = 0; k < 4; ++k) {
    built.col(k) = cnot(RegisterState::basis(2, static_cast<std::uint64_t>(k)), control, target).amplitudes();
  }
  CHECK(max_abs_diff_up_to_phase(built, Eigen::MatrixXcd(oracle::embed_pair(truth, control, target, 2))) <
        1e-12);

  std::mt19937_64 rng(8);
  const RegisterState psi = RegisterState::from_amplitudes(3, oracle::random_state(3, rng));
  CHECK(max_abs_diff(cnot(cnot(psi, 2, 0), 2, 0).amplitudes(), psi.amplitudes()) < 1e-10);
  CHECK_THROWS_AS(cnot(psi, 1, 1), IndexError);
}

TEST_CASE("CNOT makes a Bell state") {
  const RegisterState plus = apply_single(RegisterState::zero(2), 0, hadamard());
  const RegisterState bell = cnot(plus, 0, 1);
  CHECK(bell.probability(0b00) == doctest::Approx(0.5));
  CHECK(bell.probability(0b11) == doctest::Approx(0.5));
  CHECK(bell.probability(0b01) == doctest::Approx(0.0));
}

TEST_CASE("pairwise phase matrix validation") {
  Eigen::MatrixXd bad(2, 2);
  bad << 0, 1, 2, 0;
  CHECK_THROWS_AS(PairwisePhaseMatrix{bad}, ValidationError);
  bad << 0.5, 1, 1, 0;
  CHECK_THROWS_AS(PairwisePhaseMatrix{bad}, ValidationError);
  CHECK_THROWS_AS(PairwisePhaseMatrix{Eigen::MatrixXd::Zero(2, 3)}, ValidationError);
  CHECK_THROWS_AS(PairwisePhaseMatrix::homogeneous(13, 0.1), ValidationError);
  const PairwisePhaseMatrix h = PairwisePhaseMatrix::homogeneous(3, 0.4);
  CHECK(h(0, 1) == 0.4);
  CHECK(h(1, 1) == 0.0);
  Eigen::MatrixXd chi(2, 2);
  chi << 0, 2e6, 2e6, 0;
  CHECK(PairwisePhaseMatrix::from_couplings(chi, 1e-6)(0, 1) == doctest::Approx(2.0));
}

TEST_CASE("two-arm EA equals the controlled-phase gate") {
  for (double phi : {0.0, 0.3, kPi, 5.5}) {
    const Eigen::VectorXcd d = ea_unitary(PairwisePhaseMatrix::homogeneous(2, phi));
    CHECK(max_abs_diff(Eigen::Matrix4cd(d.asDiagonal()), cp_gate(phi)) < 1e-12);
  }
}

TEST_CASE("EA equals the product of pairwise controlled phases") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  const int m = 4;
  Eigen::MatrixXd phases = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) phases(i, j) = phases(j, i) = u(rng);
  }
  const RegisterState psi = RegisterState::from_amplitudes(m, oracle::random_state(m, rng));
  RegisterState expected = psi;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) expected = apply_cp(expected, i, j, phases(i, j));
  }
  CHECK(max_abs_diff(apply_ea(psi, PairwisePhaseMatrix(phases)).amplitudes(), expected.amplitudes()) <
        1e-12);
  CHECK_THROWS_AS(apply_ea(RegisterState::zero(3), PairwisePhaseMatrix(phases)), ValidationError);
}
