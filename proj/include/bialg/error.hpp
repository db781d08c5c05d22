#pragma once

#include <stdexcept>
#include <string>

namespace bialg {

/// Base class of every exception thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not conform (matrix dimensions, object sizes).
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Scalars or matrices over different fields were combined.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// Morphisms from different backends were combined, or a backend-specific
/// operation was requested on the wrong backend.
class BackendMismatch : public Error {
 public:
  using Error::Error;
};

/// Structure data is malformed (wrong arities, non-monoid tables, ...).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Something that is mathematically guaranteed failed to happen. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// An enumeration cap was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A spec file could not be read or validated. The message names the
/// offending field path.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace bialg
