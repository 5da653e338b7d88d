#pragma once

#include <stdexcept>
#include <string>

namespace retailfail {

// Base for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed CSV input: wrong arity, non-numeric field, bad header.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what, const std::string& source = {})
      : Error((source.empty() ? "" : source + ": ") + "line " + std::to_string(line) + ": " + what),
        line_(line),
        detail_(what) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

// Well-formed input that violates a dataset invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Argument outside an operation's mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Cholesky hit a non-positive pivot: collinear design or separated data.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

}  // namespace retailfail
