#pragma once

#include <stdexcept>
#include <string>

namespace hopfheap {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different fields.
class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

/// Tensor or matrix dimensions do not conform, or an index is out of range.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text (scalar strings, structure files, flags).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A derived structure could not be built: a generator-level assignment is
/// not well defined on the span, a required antipode is missing, and so on.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Two independent routes to the same object disagree.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace hopfheap
