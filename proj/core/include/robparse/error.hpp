#ifndef ROBPARSE_ERROR_HPP
#define ROBPARSE_ERROR_HPP

#include <stdexcept>
#include <cstddef>
#include <string>

namespace robparse {

/// Raised for malformed input, invalid configuration and contract violations.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input; `line` is 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& detail, std::size_t line)
      : Error(detail + " at line " + std::to_string(line)), detail_(detail), line_(line) {}

  const std::string& detail() const { return detail_; }
  std::size_t line() const { return line_; }

 private:
  std::string detail_;
  std::size_t line_;
};

}  // namespace robparse

#endif  // ROBPARSE_ERROR_HPP
