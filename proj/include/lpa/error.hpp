#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpa {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph DSL or element expression.
class ParseError : public Error {
 public:
  ParseError(std::string const& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Structurally invalid graph: duplicate identifiers, undeclared endpoints,
// unknown vertex or edge names.
class GraphError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its domain (H not hereditary, graph has a
// cycle, elements over different graphs, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class NotGroupInvertible : public Error {
 public:
  using Error::Error;
};

// A bounded search gave up without finding a witness.
class NotFoundWithinBounds : public Error {
 public:
  using Error::Error;
};

}  // namespace lpa
