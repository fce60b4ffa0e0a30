#pragma once

#include <stdexcept>
#include <string>

namespace eframe {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not conform (matrix/vector dimensions, term counts).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Matrix is singular to working precision.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// Iterative kernel failed to reach its target within the iteration cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A stated operation precondition does not hold for the given data
/// (not a frame at this truncation, symbol not one-signed, duality fails, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Declarative data cannot be materialized as requested
/// (explicit list shorter than the window, bad prefix shape, ...).
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// A problem file violates the input schema. Carries the JSON-pointer-like
/// path of the offending element.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& message)
      : Error(path + ": " + message), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace eframe
