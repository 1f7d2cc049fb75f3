#pragma once

#include <stdexcept>
#include <string>

namespace mft {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& reason)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + reason : reason), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Well-formed input that violates a model invariant (self-loop, bad vertex).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// Brute-force enumeration refused because the input is above the size guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace mft
