#pragma once

#include <stdexcept>
#include <string>

namespace capprox {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Grid too coarse for the requested operation (e.g. N <= pi * degree).
struct GridError : Error {
  using Error::Error;
};

// Fourier window does not fit the grid or the requested index range.
struct WindowError : Error {
  using Error::Error;
};

// Evaluation outside the permitted domain (|z| beyond the closed disk).
struct DomainError : Error {
  using Error::Error;
};

// Iterative solver failed to produce a usable iterate.
struct SolverError : Error {
  using Error::Error;
};

// Certificate is internally inconsistent (lower exceeds upper beyond tolerance).
struct CertificateError : Error {
  using Error::Error;
};

// A claimed sup-norm bound was exceeded.
struct BoundViolationError : Error {
  using Error::Error;
};

// Invalid configuration or CLI input.
struct ConfigError : Error {
  using Error::Error;
};

// Malformed or inconsistent serialized input.
struct ParseError : Error {
  using Error::Error;
};

// Operation called with unmet preconditions.
struct PreconditionError : Error {
  using Error::Error;
};

}  // namespace capprox
