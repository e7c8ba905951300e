#pragma once

#include <stdexcept>
#include <string>

namespace specfact {

/// Invalid argument (bad exponent, out-of-range radius, wrong sample kind, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input outside the mathematical domain of the operation (nonpositive density, divergent integral).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested bandwidth cannot be represented on the grid.
class AliasingError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// Root pairing or another numerical step failed to resolve.
class ConditioningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The computation would leave the range double precision can represent.
class PrecisionBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace specfact
