#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace logicmine {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Atom index out of range, or a clause/record that does not fit its atom table.
class StructuralError : public Error {
public:
  using Error::Error;
};

// A guarded size limit (model enumeration, learning) was exceeded.
class CapacityError : public Error {
public:
  using Error::Error;
};

// Write to a connection key with repeated indices.
class DiagonalWriteError : public Error {
public:
  using Error::Error;
};

// Clause needs connections above third order.
class UnsupportedOrderError : public Error {
public:
  using Error::Error;
};

// Malformed text input. line/column are 1-based; 0 means unknown.
class ParseError : public Error {
public:
  ParseError(const std::string &what, std::size_t line = 0, std::size_t column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  static std::string format(const std::string &what, std::size_t line, std::size_t column) {
    if (line == 0)
      return what;
    std::string s = "line " + std::to_string(line);
    if (column != 0)
      s += ", column " + std::to_string(column);
    return s + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

} // namespace logicmine
