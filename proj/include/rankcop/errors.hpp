#pragma once

#include <stdexcept>
#include <string>

namespace rankcop {

// Error taxonomy. The CLI maps these onto exit codes:
// UsageError -> 2, DataError -> 3, NumericError -> 4.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: unparseable files, inconsistent shapes, bad cell values.
class DataError : public Error {
 public:
  using Error::Error;
};

// Invalid invocation: bad flag combinations, out-of-range settings.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Numerical failure during computation.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Cholesky pivot fell below tolerance; matrix is not positive definite.
class NotPositiveDefiniteError : public NumericError {
 public:
  using NumericError::NumericError;
};

// Truncation interval too narrow to produce a draw strictly inside it.
class DegenerateIntervalError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace rankcop
