#pragma once

#include <stdexcept>
#include <string>

namespace qvariant {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Division by exact zero, mixed modes, bit-cap overflow.
struct ArithmeticError : Error {
  using Error::Error;
};

// Violated preconditions on inputs.
struct DomainError : Error {
  using Error::Error;
};

// Parameters hit a non-generic configuration: a vanishing Pochhammer
// denominator, a node coincidence. Sweeps resample on this.
struct DegenerateError : DomainError {
  using DomainError::DomainError;
};

// Integer exponent gap whose obstruction does not vanish.
struct ResonanceError : DegenerateError {
  using DegenerateError::DegenerateError;
};

}  // namespace qvariant
