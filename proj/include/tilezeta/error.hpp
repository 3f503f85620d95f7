#pragma once

#include <stdexcept>
#include <string>

namespace tilezeta {

/// Input data violates a documented invariant (bad weights, unknown colors,
/// malformed files). Maps to CLI exit code 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition of an operation is not met (non-primitive matrix, dense base
/// group where a lattice is required, unreachable window, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed result failed its own post-condition check. Maps to exit code 3.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration exceeded its configured cap.
class CapExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace tilezeta
