#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyper {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: bad tables, violated preconditions.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured size limit would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Text input that does not follow a grammar; `line()` is 1-based, 0 if
/// the error is not tied to a line.
class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InvalidInput(line == 0 ? what
                               : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Size limits for the exhaustive searches. Runtime grows as Bell(n) for
/// `simplicity_n`, roughly |G|^2 per subgroup for `group_order`, and
/// linearly for `trame_size`.
struct Caps {
  std::size_t simplicity_n = 12;
  std::size_t group_order = 120;
  std::size_t trame_size = 65536;
};

}  // namespace hyper
