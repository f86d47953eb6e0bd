#pragma once

#include <stdexcept>
#include <string>

namespace semired {

// Base of everything this library throws deliberately.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid user-supplied data. The CLI maps these to exit code 2.
struct InputError : Error {
  using Error::Error;
};

struct NotIntegralError : InputError {
  using InputError::InputError;
};

struct NotUnitaryError : InputError {
  using InputError::InputError;
};

struct NotClosedError : InputError {
  using InputError::InputError;
};

struct NoIdentityError : InputError {
  using InputError::InputError;
};

struct NotInDiscError : InputError {
  using InputError::InputError;
};

// Contract violations that indicate a bug upstream. CLI exit code 3.
struct InternalError : Error {
  using Error::Error;
};

struct MaxIterationsError : InternalError {
  using InternalError::InternalError;
};

struct CentralityViolationError : InternalError {
  using InternalError::InternalError;
};

struct AmbiguousTraceError : InternalError {
  using InternalError::InternalError;
};

struct DimMismatchError : InternalError {
  using InternalError::InternalError;
};

// Caller misuse of library preconditions (never reachable through the CLI).
struct NotSemisimpleError : Error {
  using Error::Error;
};

struct NotApproxIdempotentError : Error {
  using Error::Error;
};

struct TooLargeError : Error {
  using Error::Error;
};

}  // namespace semired
