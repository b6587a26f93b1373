#pragma once

#include <stdexcept>
#include <string>

namespace upsilon {

// Exception hierarchy. The CLI maps each kind to an exit code.

/// Malformed arguments or inputs (bad dimension, out-of-range symbol, parse failure).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public InvalidArgument {
 public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs)
      : InvalidArgument("dimension mismatch: " + std::to_string(lhs) + " vs " +
                        std::to_string(rhs)) {}
};

class ParseError : public InvalidArgument {
 public:
  ParseError(const std::string& what, std::size_t line)
      : InvalidArgument("parse error at line " + std::to_string(line) + ": " + what) {}
};

/// A well-formed input that violates an operation's precondition
/// (e.g. a code that is not perfect handed to a construction).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested window, search or pair scan exceeds the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace upsilon
