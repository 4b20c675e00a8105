#pragma once

#include <stdexcept>
#include <string>

namespace ppp {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (case files, instance JSON, solution files).
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_ = 0;
};

/// Structurally well-formed input that violates an invariant.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// An operation was called outside its stated precondition.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// An exhaustive search refused to run because the input is too large.
class SizeError : public Error {
public:
  using Error::Error;
};

/// A value or name cannot be represented in the requested output format.
class FormatError : public Error {
public:
  using Error::Error;
};

}  // namespace ppp
