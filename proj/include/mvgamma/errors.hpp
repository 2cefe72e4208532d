#pragma once

#include <stdexcept>
#include <string>

namespace mvg {

// Root of every error the library raises on bad input. The CLI maps the
// subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Table dimensions or indices do not fit the declared carrier.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A value violates the precondition of the operation applied to it
// (non-chain where a chain is required, non-ideal, non-positive unit, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Exact integer arithmetic left the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// A library invariant failed; always a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

// JSON input does not match the expected schema; `pointer` locates the
// offending value as an RFC 6901 JSON pointer.
class SchemaError : public Error {
 public:
  SchemaError(std::string pointer, const std::string& what)
      : Error("schema violation at " + (pointer.empty() ? std::string("/") : pointer) + ": " + what), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace mvg
