#pragma once

#include <stdexcept>
#include <string>

namespace scx {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: unknown alternatives, x == y, out-of-range state index.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A rule was evaluated on a profile outside the domain it is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A requested enumeration or search exceeds the configured budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Raised when an internal consistency assertion fails (a bug, not bad input).
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace scx
