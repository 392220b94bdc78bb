#pragma once

#include <stdexcept>

namespace cavq {

/// Argument outside the mathematical domain of an operation (non-finite angle, q = 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Structurally invalid input: non-unitary matrix, asymmetric phase matrix, bad parameter set.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Arm, mode or qubit index out of range.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Bundle selection found no longitudinal mode inside the requested band.
class NoModeInBand : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operator couples the dual-rail encoded subspace to states outside it.
class LeakageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cavq
