#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isecode {

// Bad arguments: dimension mismatch, out-of-range symbol or index.
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition refuses the request (a bound that does not apply,
// a capacity condition that fails, a size cap that would be exceeded).
class Refusal : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A search hit its time budget; only a lower bound is known.
class SearchTimeout : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed family file; `line()` is 1-based, 0 when not line-specific.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

}  // namespace isecode
