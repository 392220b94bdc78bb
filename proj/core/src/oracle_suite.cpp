#include "cavq/oracle_suite.hpp"

#include "cavq/constants.hpp"
#include "cavq/entanglement.hpp"
#include "cavq/fock.hpp"
#include "cavq/linalg.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace cavq {
namespace {

constexpr double kTolerance = 1e-12;

std::string describe(double value) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << value;
  return os.str();
}

double sparse_max_abs(const SparseMatrix& m) {
  double worst = 0.0;
  for (Eigen::Index col = 0; col < m.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(m, col); it; ++it) {
      worst = std::max(worst, std::abs(it.value()));
    }
  }
  return worst;
}

OracleCheck check(std::string name, double error, double tolerance) {
  return {std::move(name), error <= tolerance,
          "max deviation " + describe(error) + " (tolerance " + describe(tolerance) + ")"};
}

}  // namespace

std::vector<OracleCheck> run_oracle_suite(const OracleOptions& options) {
  // Two arms, modes ordered (H1, V1, H2, V2).
  const FockSpace space(options.n_max, 4);
  const DualRailEncoding encoding = DualRailEncoding::consecutive(2);
  const std::vector<int> v1{encoding.arms[0].v_mode};
  const std::vector<int> v2{encoding.arms[1].v_mode};
  const double sign = options.inject_sign_flip ? -1.0 : 1.0;
  auto kerr = [&](double phi) { return kerr_unitary(space, sign * phi, v1, v2); };

  std::mt19937_64 engine(options.seed);
  std::uniform_real_distribution<double> angle(-kPi, kPi);

  std::vector<OracleCheck> out;

  {
    double err = 0.0;
    for (int k = 0; k < space.num_modes(); ++k) {
      const FockOperator n = number_operator(space, k);
      const FockOperator ada = creation(space, k) * annihilation(space, k);
      err = std::max(err, sparse_max_abs((n - ada).matrix()));
    }
    out.push_back(check("number-operator-equals-adag-a", err, 1e-14));
  }

  {
    // [a, a^dagger] = 1 except on |n_max>, where truncation gives -n_max.
    double err = 0.0;
    for (int k = 0; k < space.num_modes(); ++k) {
      const FockOperator a = annihilation(space, k);
      const FockOperator ad = creation(space, k);
      const FockOperator comm = a * ad - ad * a;
      for (std::size_t i = 0; i < space.dimension(); ++i) {
        const double expected =
            space.occupation(i, k) == space.n_max() ? -static_cast<double>(space.n_max()) : 1.0;
        err = std::max(err, std::abs(comm.diagonal(i) - expected));
      }
      if (!comm.is_diagonal()) {
        err = std::max(err, 1.0);
      }
    }
    out.push_back(check("truncated-commutator", err, 1e-14));
  }

  {
    double err = 0.0;
    for (int t = 0; t < options.random_phases; ++t) {
      const FockOperator u = kerr(angle(engine));
      if (!u.is_diagonal()) {
        err = 1.0;
      }
      for (std::size_t i = 0; i < space.dimension(); ++i) {
        err = std::max(err, std::abs(std::abs(u.diagonal(i)) - 1.0));
      }
    }
    out.push_back(check("kerr-diagonal-unit-modulus", err, kTolerance));
  }

  {
    double err = 0.0;
    for (int t = 0; t < options.random_phases; ++t) {
      const double phi = angle(engine);
      err = std::max(err, max_abs_diff(restrict_to_qubits(kerr(phi), encoding), cp_gate(phi)));
    }
    out.push_back(check("kerr-restriction-equals-cp-gate", err, kTolerance));
  }

  {
    const double err = max_abs_diff(restrict_to_qubits(kerr(kPi), encoding), cz_gate());
    out.push_back(check("kerr-restriction-at-pi-equals-cz", err, kTolerance));
  }

  {
    // Many-photon sector: e^{i phi n_a n_b} for every occupation up to n_max.
    const double phi = angle(engine);
    const FockOperator u = kerr(phi);
    double err = 0.0;
    for (std::size_t i = 0; i < space.dimension(); ++i) {
      const int na = space.occupation(i, v1[0]);
      const int nb = space.occupation(i, v2[0]);
      err = std::max(err, std::abs(u.diagonal(i) - std::polar(1.0, phi * na * nb)));
    }
    out.push_back(check("kerr-many-photon-phases", err, kTolerance));
  }

  {
    double err = max_abs_diff(restrict_to_qubits(identity_operator(space), encoding),
                              Matrix4::Identity());
    for (int t = 0; t < options.random_phases; ++t) {
      const double phi = angle(engine);
      const Eigen::VectorXcd ea = ea_unitary(PairwisePhaseMatrix::homogeneous(2, phi));
      err = std::max(err, max_abs_diff(Eigen::MatrixXcd(ea.asDiagonal()), cp_gate(phi)));
    }
    out.push_back(check("ea-two-arm-equals-cp-gate", err, kTolerance));
  }

  {
    // +n, -n and 0 on n photons in H, n photons in V and a single photon in (H + V)/sqrt2.
    double err = 0.0;
    const DualRailArm arm = encoding.arms[0];
    for (int n = 0; n <= space.n_max(); ++n) {
      std::vector<int> h_occ{n, 0, 0, 0};
      std::vector<int> v_occ{0, n, 0, 0};
      err = std::max(err, std::abs(stokes_expectation(space, fock_basis_state(space, h_occ), arm) - n));
      err = std::max(err, std::abs(stokes_expectation(space, fock_basis_state(space, v_occ), arm) + n));
    }
    const std::vector<int> h1{1, 0, 0, 0};
    const std::vector<int> v1_occ{0, 1, 0, 0};
    const FockState diag =
        (fock_basis_state(space, h1) + fock_basis_state(space, v1_occ)) / std::sqrt(2.0);
    err = std::max(err, std::abs(stokes_expectation(space, diag, arm)));
    out.push_back(check("stokes-canonical-states", err, 1e-15));
  }

  {
    // On encoded qubits the Stokes readout equals <Z> of the register.
    std::normal_distribution<double> gauss;
    double err = 0.0;
    for (int t = 0; t < options.random_phases; ++t) {
      Eigen::VectorXcd amps(4);
      for (Eigen::Index k = 0; k < 4; ++k) {
        amps(k) = {gauss(engine), gauss(engine)};
      }
      amps.normalize();
      const RegisterState reg = RegisterState::from_amplitudes(2, amps);
      const FockState fs = encode_register(space, encoding, reg);
      for (int a = 0; a < 2; ++a) {
        err = std::max(err, std::abs(stokes_expectation(space, fs, encoding.arms[static_cast<std::size_t>(a)]) -
                                     expect_z(reg, a)));
      }
    }
    out.push_back(check("stokes-equals-qubit-readout", err, kTolerance));
  }

  {
    const std::vector<int> arm0{0, 1};
    const std::vector<int> arm1{2, 3};
    const FockOperator n0 = bundle_number(space, arm0);
    const FockOperator n1 = bundle_number(space, arm1);
    const double err = sparse_max_abs((n0 * n1 - n1 * n0).matrix());
    out.push_back(check("disjoint-bundles-commute", err, 0.0));
  }

  return out;
}

}  // namespace cavq
