#pragma once

#include <stdexcept>
#include <string>

namespace orthoweave {

// Bad argument or precondition (division by zero, non-unit normal, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Tangle-expression syntax error, 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A construction or input breaks a packing / necklace / diagram invariant.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace orthoweave
