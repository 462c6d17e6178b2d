#pragma once

#include <stdexcept>
#include <string>

namespace glb {

// Operand shapes disagree (ambient dimension, grade, kind).
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation does not hold for its input.
class PreconditionFailed : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A post-verification step found a nonzero residual. The message carries the
// residual in serialized form.
class VerificationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace glb
