#pragma once

#include <stdexcept>
#include <string>

namespace lenstorsion {

/// Argument outside the domain of an operation (a <= 0, a > 1, bad lens data, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation requested within 1e-9 of a pole of a zeta function.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// gcd(nu, mu) != 1 where an inverse modulo mu is required.
class NotCoprimeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A character average that should be a nonnegative integer was not.
/// This always indicates a bug in character evaluation.
class IntegralityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two routes to the same closed-form quantity disagreed.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lenstorsion
