#pragma once

#include <stdexcept>
#include <string>

namespace qbath {

/// Caller passed an argument outside the operation's domain (bad index, negative time, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value failed a structural check (Hermiticity, trace, positivity, normalization).
class ValidationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A documented precondition of a derived quantity does not hold (e.g. E(0) != 0).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qbath
