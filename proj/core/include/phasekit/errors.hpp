#pragma once

#include <stdexcept>
#include <string>

namespace phasekit {

/// Bad arguments, malformed specs, violated preconditions. CLI exit code 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Index or state dimension out of range (n >= dim, state larger than operator).
class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Truncated basis does not capture enough of the requested state.
class TruncationError : public ValidationError {
 public:
  TruncationError(const std::string& what, double captured)
      : ValidationError(what), captured_probability(captured) {}
  double captured_probability;
};

/// String did not match the state-spec grammar.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : ValidationError(what), position(position) {}
  std::size_t position;
};

/// A series or quadrature did not reach its tolerance. CLI exit code 2.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite integrand value at a grid node. CLI exit code 2.
class IntegrationError : public ConvergenceError {
 public:
  using ConvergenceError::ConvergenceError;
};

/// Filesystem failure. CLI exit code 3.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace phasekit
