#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symcalc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different phase spaces (n differs) or truncations
/// that must be shared do not match.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain, e.g. a star-exponential of
/// a symbol of positive order.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A t-side symbol does not vanish at t = 0 to the order its declared
/// filtration requires.
class FiltrationViolation : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class UnassignedParameter : public Error {
 public:
  using Error::Error;
};

/// Syntax error in an expression, tagged with a 1-based source location.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        detail_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

/// A well-formed expression uses atoms that are illegal for the requested
/// symbol type (t in a W-symbol, sinv outside SW, ...).
class LoweringError : public Error {
 public:
  using Error::Error;
};

}  // namespace symcalc
