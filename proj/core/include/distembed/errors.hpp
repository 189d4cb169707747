#pragma once

#include <stdexcept>
#include <string>

namespace distembed {

/// Precondition violations on arguments: dimension mismatches, non-finite
/// inputs, out-of-range parameters.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A derivative order was requested beyond the kernel's declared smoothness.
class UnsupportedOrder : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configuration the implementation deliberately refuses to interpret.
class UnsupportedConfiguration : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Results that violate a mathematical identity beyond roundoff, e.g. a
/// self inner product with a sizeable imaginary part. Usually a kernel bug.
class NumericalInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class QuadratureBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace distembed
