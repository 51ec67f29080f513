#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace strata {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (mismatched variable lists,
/// invalid matrix order, malformed segment data, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A general tail was requested for a term order whose tails are infinite.
class NotReliable : public Error {
 public:
  using Error::Error;
};

/// An exclusion ideal divides a basis monomial, so no ideal can satisfy it.
class EmptyStratum : public Error {
 public:
  using Error::Error;
};

/// An ideal turned out to be the whole ring.
class UnitIdeal : public Error {
 public:
  using Error::Error;
};

/// Problem text that does not follow the grammar.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Problem text that parses but does not describe a valid problem.
class SemanticError : public Error {
 public:
  using Error::Error;
};

}  // namespace strata
