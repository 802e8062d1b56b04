#pragma once

#include <stdexcept>
#include <string>

namespace isopencil {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad shapes or arguments outside an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class DimensionTooLarge : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NotHermitian : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NotSkewAdjoint : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Word enumeration would exceed the configured work budget.
class ComplexityLimit : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Numerical failures. The CLI maps these to exit code 2.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DegenerateSpectrum : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ResidualTooLarge : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ClusterAmbiguity : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Input failures. The CLI maps these to exit code 1.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class ValueError : public InputError {
 public:
  using InputError::InputError;
};

class IoError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace isopencil
