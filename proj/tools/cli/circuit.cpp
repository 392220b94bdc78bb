#include "cli/circuit.hpp"

#include "cli/quantity.hpp"

#include "cavq/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace cavq::cli {
namespace {

struct Signature {
  OpCode op;
  int arms;
  int angles;
};

const std::map<std::string, Signature>& signatures() {
  static const std::map<std::string, Signature> table{
      {"RZ", {OpCode::Rz, 1, 1}},  {"RPERP", {OpCode::Rperp, 1, 2}}, {"H", {OpCode::H, 1, 0}},
      {"CP", {OpCode::Cp, 2, 1}},  {"CZ", {OpCode::Cz, 2, 0}},       {"CNOT", {OpCode::Cnot, 2, 0}},
  };
  return table;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream is(line.substr(0, line.find('#')));
  std::vector<std::string> tokens;
  for (std::string tok; is >> tok;) {
    tokens.push_back(tok);
  }
  return tokens;
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

int parse_int(const std::string& tok, int line, const char* what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size()) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" + tok + "'");
  }
  return v;
}

}  // namespace

Eigen::MatrixXd read_phase_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open phase matrix '" + path.string() + "'");
  }
  std::vector<std::vector<double>> rows;
  for (std::string line; std::getline(in, line);) {
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    std::vector<double> row;
    for (const auto& tok : tokens) {
      row.push_back(parse_angle(tok));
    }
    rows.push_back(std::move(row));
  }
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(rows[static_cast<std::size_t>(i)].size()) != n) {
      throw std::runtime_error("phase matrix '" + path.string() + "' is not square");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  return m;
}

CircuitProgram parse_circuit(std::istream& in, const std::filesystem::path& base_dir,
                             std::optional<int> num_arms) {
  CircuitProgram program;
  program.num_arms = num_arms.value_or(0);
  if (num_arms && (*num_arms < 1 || *num_arms > RegisterState::kMaxArms)) {
    throw ParseError(0, "number of qubits must be in [1, 12]");
  }
  bool declared = false;

  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string keyword = upper(tokens[0]);

    if (keyword == "QUBITS") {
      if (tokens.size() != 2) throw ParseError(line_no, "QUBITS takes one argument");
      if (declared) throw ParseError(line_no, "QUBITS declared twice");
      if (!program.instructions.empty()) throw ParseError(line_no, "QUBITS must precede gates");
      const int m = parse_int(tokens[1], line_no, "qubit count");
      if (m < 1 || m > RegisterState::kMaxArms) {
        throw ParseError(line_no, "number of qubits must be in [1, 12]");
      }
      if (num_arms && *num_arms != m) {
        throw ParseError(line_no, "QUBITS " + std::to_string(m) + " conflicts with --qubits " +
                                      std::to_string(*num_arms));
      }
      program.num_arms = m;
      declared = true;
      continue;
    }

    if (program.num_arms == 0) {
      throw ParseError(line_no, "qubit count unknown: add a QUBITS line or pass --qubits");
    }

    Instruction ins;
    ins.line = line_no;
    if (keyword == "EA") {
      if (tokens.size() != 2) throw ParseError(line_no, "EA takes a matrix file path");
      ins.op = OpCode::Ea;
      try {
        PairwisePhaseMatrix phases(read_phase_matrix(base_dir / tokens[1]));
        if (phases.num_arms() != program.num_arms) {
          throw ParseError(line_no, "EA matrix size does not match the qubit count");
        }
        ins.phases = std::move(phases);
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception& e) {
        throw ParseError(line_no, e.what());
      }
      program.instructions.push_back(std::move(ins));
      continue;
    }

    const auto sig = signatures().find(keyword);
    if (sig == signatures().end()) {
      throw ParseError(line_no, "unknown instruction '" + tokens[0] + "'");
    }
    const Signature& s = sig->second;
    if (static_cast<int>(tokens.size()) != 1 + s.arms + s.angles) {
      throw ParseError(line_no, keyword + " expects " + std::to_string(s.arms) + " arm(s) and " +
                                    std::to_string(s.angles) + " angle(s)");
    }
    ins.op = s.op;
    for (int a = 0; a < s.arms; ++a) {
      const int arm = parse_int(tokens[static_cast<std::size_t>(1 + a)], line_no, "arm");
      if (arm < 0 || arm >= program.num_arms) {
        throw ParseError(line_no, "arm " + std::to_string(arm) + " out of range");
      }
      ins.arms.push_back(arm);
    }
    if (s.arms == 2 && ins.arms[0] == ins.arms[1]) {
      throw ParseError(line_no, keyword + " needs two distinct arms");
    }
    for (int k = 0; k < s.angles; ++k) {
      try {
        ins.angles.push_back(parse_angle(tokens[static_cast<std::size_t>(1 + s.arms + k)]));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
    }
    program.instructions.push_back(std::move(ins));
  }

  if (program.num_arms == 0) {
    throw ParseError(line_no, "qubit count unknown: add a QUBITS line or pass --qubits");
  }
  return program;
}

CircuitProgram parse_circuit_file(const std::filesystem::path& path, std::optional<int> num_arms) {
  std::ifstream in(path);
  if (!in) {
    throw std::ios_base::failure("cannot open circuit file '" + path.string() + "'");
  }
  return parse_circuit(in, path.parent_path(), num_arms);
}

RegisterState execute(const CircuitProgram& program) {
  RegisterState state = RegisterState::zero(program.num_arms);
  for (const Instruction& ins : program.instructions) {
    switch (ins.op) {
      case OpCode::Rz:
        state = apply_single(state, ins.arms[0], rz(ins.angles[0]));
        break;
      case OpCode::Rperp:
        state = apply_single(state, ins.arms[0], rperp(ins.angles[0], ins.angles[1]));
        break;
      case OpCode::H:
        state = apply_single(state, ins.arms[0], hadamard());
        break;
      case OpCode::Cp:
        state = apply_cp(state, ins.arms[0], ins.arms[1], ins.angles[0]);
        break;
      case OpCode::Cz:
        state = apply_cz(state, ins.arms[0], ins.arms[1]);
        break;
      case OpCode::Cnot:
        state = cnot(state, ins.arms[0], ins.arms[1]);
        break;
      case OpCode::Ea:
        state = apply_ea(state, *ins.phases);
        break;
    }
  }
  return state;
}

}  // namespace cavq::cli
