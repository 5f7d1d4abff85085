#pragma once

#include <stdexcept>
#include <string>

namespace steer {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input data (density matrix, JSON document, ...) failed validation.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The instance evaluates to Q = 0, so no visibility is defined.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sign enumeration would exceed the supported size (n > 24).
class EnumerationTooLarge : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A root-finding bracket has no sign change (no violation / no crossing).
class NoRootError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace steer
