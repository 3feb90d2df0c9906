#pragma once

#include <stdexcept>

namespace latfix {

/// Malformed input: shapes, literals, negative entries in a positive operator.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation's mathematical precondition does not hold.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input lies outside the class an exact procedure supports (degree bound,
/// search budget, non-closed-form operator).
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A certified result contradicts a theorem that should apply. Always a bug.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace latfix
