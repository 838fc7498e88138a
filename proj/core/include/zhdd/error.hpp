#pragma once

#include <stdexcept>
#include <string>

namespace zhdd {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid generator parameters or arity mismatch when composing terms.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed the configured qubit / wire cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Input does not have the structure an operation requires (e.g. a term
/// that is not in decision-diagram form, a non-reduced diagram).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Raised when stage-by-stage checking detects a semantic change.
class StageCheckError : public Error {
 public:
  using Error::Error;
};

}  // namespace zhdd
