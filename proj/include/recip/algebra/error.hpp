#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace recip {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

class NonUnitError : public Error {
 public:
  using Error::Error;
};

class ZeroFunctionError : public Error {
 public:
  using Error::Error;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

/// Raised when a factorization cannot be produced or certified.
class FactorizationError : public Error {
 public:
  using Error::Error;
};

/// Curve shapes, weights or rings outside the supported families.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace recip
