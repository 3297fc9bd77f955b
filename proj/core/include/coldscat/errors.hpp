#pragma once

#include <stdexcept>
#include <string>

namespace coldscat {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A caller violated a documented precondition.
struct InvalidArgument : Error {
  using Error::Error;
};

// Run configuration file is malformed or inconsistent.
struct ConfigError : Error {
  using Error::Error;
};

// A requested bound level does not exist.
struct NoSuchLevel : Error {
  using Error::Error;
};

// An iterative solve failed to reach its internal tolerance.
struct ConvergenceError : Error {
  using Error::Error;
};

// A linear-algebra step failed (singular factorization etc.).
struct NumericalBreakdown : Error {
  using Error::Error;
};

// Results are formally available but fail an accuracy postcondition.
struct AccuracyError : Error {
  using Error::Error;
};

}  // namespace coldscat
