#pragma once

#include <stdexcept>
#include <string>

namespace legfront {

enum class ErrorKind {
  InvalidFront,
  EmptyDiagram,
  MultiComponent,
  InvalidArgument,
  Parse,
  CrossingCap,
  FormulaRange,
  OutOfDomain,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` is stable and machine
/// readable; `what()` carries the human message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed text input; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace legfront
