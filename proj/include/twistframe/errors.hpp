#pragma once

#include <stdexcept>
#include <string>

namespace twistframe {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand lengths or matrix shapes do not conform.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive routine was asked to go beyond its enumeration cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A form whose Gauss sum has the wrong modulus (it cannot satisfy the
/// refinement law).
class InvalidFormError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A value in H has the wrong parity for the slot it is placed in.
class ParityError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (bit-strings, documents).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace twistframe
