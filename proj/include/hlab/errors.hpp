#pragma once

#include <stdexcept>
#include <string>

namespace hlab {

// Violated precondition on user-supplied parameters (CLI exit code 2).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operands living over different fields.
class FieldMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DimensionMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A computation would exceed the configured size limits (CLI exit code 3).
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Both the H^0 and H^k rows of the hypercohomology spectral sequence survive.
class UnsupportedTwistWindow : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InvalidParameter(what);
}

}  // namespace hlab
