#pragma once

#include <stdexcept>
#include <string>

namespace isa {

// Error taxonomy; the categories map 1:1 onto the C API status codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad invocation: missing arguments, step after done, sampling an empty buffer.
struct UsageError : Error {
  using Error::Error;
};

// Invalid configuration values or dimension indices.
struct ConfigError : Error {
  using Error::Error;
};

// Shape mismatches between vectors that must agree.
struct StructuralError : Error {
  using Error::Error;
};

// Mutual-information estimation preconditions violated (empty data, thin groups).
struct EstimationError : Error {
  using Error::Error;
};

// Failures during simulation or training (NaN losses, I/O).
struct RuntimeFailure : Error {
  using Error::Error;
};

}  // namespace isa
