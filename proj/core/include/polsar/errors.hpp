// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace polsar {

/// Base class of everything thrown by the library.
class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad inputs: dimensions, ranges, unknown names, malformed files.
/// The CLI maps these to exit code 1.
class ValidationError : public Error {
  using Error::Error;
};

/// Failures that arise from the data during computation.
/// The CLI maps these to exit code 2.
class NumericalError : public Error {
  using Error::Error;
};

class DimensionMismatch : public ValidationError {
  using ValidationError::ValidationError;
};

class EmptySample : public ValidationError {
  using ValidationError::ValidationError;
};

class BetaOutOfRange : public ValidationError {
  using ValidationError::ValidationError;
};

class LooksMismatch : public ValidationError {
  using ValidationError::ValidationError;
};

class NonIntegerLooks : public ValidationError {
  using ValidationError::ValidationError;
};

class UnknownClass : public ValidationError {
  using ValidationError::ValidationError;
};

class MismatchedSegments : public ValidationError {
  using ValidationError::ValidationError;
};

class PaletteMissingClass : public ValidationError {
  using ValidationError::ValidationError;
};

class ZeroVariance : public ValidationError {
  using ValidationError::ValidationError;
};

/// Malformed file contents; message carries position diagnostics.
class FormatError : public ValidationError {
  using ValidationError::ValidationError;
};

class SingularMatrix : public NumericalError {
  using NumericalError::NumericalError;
};

class NotPositiveDefinite : public NumericalError {
  using NumericalError::NumericalError;
};

class DomainError : public NumericalError {
  using NumericalError::NumericalError;
};

class NegativeIntensity : public NumericalError {
  using NumericalError::NumericalError;
};

class DegenerateMarginals : public NumericalError {
  using NumericalError::NumericalError;
};

}  // namespace polsar
