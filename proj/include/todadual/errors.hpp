#pragma once

#include <stdexcept>
#include <string>

namespace todadual {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix that should lie in the Lie algebra (or group) does not.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Internal cross-check between two independent routes disagreed.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// The input point sits on (or too close to) a wall of the open dense cell
/// where the gauge fixing is defined.
class NonGenericPointError : public Error {
 public:
  using Error::Error;
};

class DegenerateSpectrumError : public NonGenericPointError {
 public:
  using NonGenericPointError::NonGenericPointError;
};

class GaussDecompositionError : public NonGenericPointError {
 public:
  using NonGenericPointError::NonGenericPointError;
};

/// Spectral coordinates outside the open Weyl chamber, or at a pole of the
/// Moser-gauge closed forms.
class ChamberError : public NonGenericPointError {
 public:
  using NonGenericPointError::NonGenericPointError;
};

class StepFailureError : public Error {
 public:
  using Error::Error;
};

}  // namespace todadual
