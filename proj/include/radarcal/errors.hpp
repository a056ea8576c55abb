#pragma once

#include <stdexcept>
#include <string>

namespace radarcal {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation time outside the valid spline domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Linear system is singular or ill-conditioned (degenerate geometry).
class SingularSystemError : public Error {
 public:
  using Error::Error;
};

/// Robust estimation could not find enough support for any hypothesis.
class EstimationFailedError : public Error {
 public:
  using Error::Error;
};

/// Residual or Jacobian evaluation produced non-finite values.
class NumericalFailureError : public Error {
 public:
  using Error::Error;
};

/// Not enough measurements to pose the problem.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// Simulated target is outside the camera's field of view.
class VisibilityError : public Error {
 public:
  using Error::Error;
};

/// Input file could not be parsed; message names the offending line.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Dataset-level ingestion failure (no overlap, all scans unusable, ...).
class IngestionError : public Error {
 public:
  using Error::Error;
};

/// Configuration violates the schema.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Observability diagnostic received motion it cannot characterize
/// (zero angular or linear velocity).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

}  // namespace radarcal
