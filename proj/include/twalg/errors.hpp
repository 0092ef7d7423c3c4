// Error taxonomy shared by all twalg components.
#pragma once

#include <stdexcept>
#include <string>

namespace twalg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Incompatible dimensions (matmul, commutator, stacking, ...).
struct ShapeError : Error {
  using Error::Error;
};

// Argument outside the mathematical domain of the operation.
struct DomainError : Error {
  using Error::Error;
};

// A documented precondition on the input data does not hold.
struct PreconditionError : Error {
  using Error::Error;
};

// An internal certainty failed (e.g. a basis came out rank deficient).
struct IntegrityError : Error {
  using Error::Error;
};

// A configured size cap would be exceeded.
struct ResourceError : Error {
  using Error::Error;
};

}  // namespace twalg
