#pragma once

// Line-oriented circuit files:
//
//   # comment
//   QUBITS 2
//   H 1
//   CNOT 1 0
//   RZ 0 pi/4
//   RPERP 1 pi/2 0
//   CP 0 1 pi/8
//   CZ 0 1
//   EA phases.txt      (M x M whitespace-separated phase matrix, path relative to the circuit)
//
// Arm i is bit i of the amplitude index; the register starts in |0...0>.

#include "cavq/entanglement.hpp"
#include "cavq/polarization.hpp"

#include <filesystem>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cavq::cli {

enum class OpCode { Rz, Rperp, H, Cp, Cz, Cnot, Ea };

struct Instruction {
  OpCode op = OpCode::H;
  std::vector<int> arms;
  std::vector<double> angles;
  std::optional<PairwisePhaseMatrix> phases;
  int line = 0;
};

struct CircuitProgram {
  int num_arms = 0;
  std::vector<Instruction> instructions;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// `num_arms` (from the command line) may stand in for, but must agree with, a QUBITS line.
CircuitProgram parse_circuit(std::istream& in, const std::filesystem::path& base_dir,
                             std::optional<int> num_arms = std::nullopt);

CircuitProgram parse_circuit_file(const std::filesystem::path& path,
                                  std::optional<int> num_arms = std::nullopt);

/// Read a square phase matrix for EA instructions.
Eigen::MatrixXd read_phase_matrix(const std::filesystem::path& path);

RegisterState execute(const CircuitProgram& program);

}  // namespace cavq::cli
