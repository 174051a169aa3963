#pragma once

#include <stdexcept>
#include <string>

namespace sfglm {

// Precondition violated by the caller: mismatched dimensions, zero divisor,
// non-coprime moduli, ideal not zero-dimensional, ...
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed external input (system files, CLI arguments).
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ", column " +
                                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// An internal invariant that the algorithms guarantee did not hold.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sfglm
