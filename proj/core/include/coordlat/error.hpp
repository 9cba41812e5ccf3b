#pragma once

#include <stdexcept>
#include <string>

namespace coordlat {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size cap (ring order, module order, hom candidates) was exceeded.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// Arguments that do not fit together, e.g. submodules of different modules.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Operation tables violate a ring or module axiom.
class AxiomError : public Error {
 public:
  using Error::Error;
};

/// A family of sets or an order relation does not form a lattice.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An input does not satisfy the algebraic precondition of an operation.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two computations that must agree did not.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A document is syntactically valid but a field is missing or malformed.
class SchemaError : public Error {
 public:
  SchemaError(std::string field, const std::string& message)
      : Error("field `" + field + "`: " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace coordlat
