#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sqe {

// Raised when an operation's arguments violate its documented preconditions.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised by the graph6 reader. `offset` is the byte index of the first bad
// byte within its line; `line` is 1-based, 0 when parsing a lone string.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& detail, std::size_t offset, std::size_t line = 0)
      : std::runtime_error((line ? "line " + std::to_string(line) + ": " : std::string()) + detail +
                           " (at byte " + std::to_string(offset) + ")"),
        detail_(detail),
        offset_(offset),
        line_(line) {}

  const std::string& detail() const noexcept { return detail_; }
  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string detail_;
  std::size_t offset_;
  std::size_t line_;
};

// Numerical post-condition failure (e.g. a quotient matrix with complex spectrum).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sqe
