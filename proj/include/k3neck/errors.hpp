#pragma once

#include <stdexcept>
#include <string>

namespace k3neck {

// Precondition violated by the caller (bad parameters, wrong region, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Evaluation at or too close to a pole of a meromorphic function.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Finite precision broke down (singular discriminant, degenerate Jacobian, ...).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace k3neck
