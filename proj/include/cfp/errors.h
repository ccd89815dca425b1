#pragma once

#include <stdexcept>
#include <string>

namespace cfp {

// Bad argument that is not a physics constraint (wrong length, empty input,
// out-of-range index, malformed configuration).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public InvalidArgument {
 public:
  DimensionMismatch(std::size_t a, std::size_t b)
      : InvalidArgument("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class ZeroNormError : public InvalidArgument {
 public:
  ZeroNormError() : InvalidArgument("cannot normalize a zero-norm vector") {}
};

// The configuration is well formed but physically inadmissible: visibility
// at or below 1/2, or more than one photon per time unit in expectation.
class PhysicsViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace cfp
