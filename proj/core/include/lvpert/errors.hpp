#pragma once

#include <stdexcept>
#include <string>

namespace lvpert {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad call arguments: empty or non-monotone grids, out-of-range orders, short trajectories.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Input outside the mathematical domain of an operation (e.g. ln of a non-positive population).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// NaN or infinity where a finite value is required.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

/// Failures of a numerical procedure that was given valid input.
class NumericError : public Error {
 public:
  using Error::Error;
};

class StepSizeUnderflowError : public NumericError {
 public:
  using NumericError::NumericError;
};

class DivergenceError : public NumericError {
 public:
  using NumericError::NumericError;
};

class PeriodNotFoundError : public NumericError {
 public:
  using NumericError::NumericError;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace lvpert
