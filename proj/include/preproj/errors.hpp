#pragma once

#include <stdexcept>
#include <string>

namespace preproj {

// Base of every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad user input: unparsable text, wrong parity, mismatched types.
struct InputError : Error {
  using Error::Error;
};

// A precondition on the mathematical object failed (e.g. not join-irreducible).
struct DomainError : InputError {
  using InputError::InputError;
};

// Requested enumeration exceeds the configured cap.
struct CapacityError : Error {
  using Error::Error;
};

// Construction is defined, but not implemented for this case.
struct UnsupportedError : Error {
  using Error::Error;
};

// An internal cross-check failed. Indicates a bug or a false statement.
struct ConsistencyError : Error {
  using Error::Error;
};

}  // namespace preproj
