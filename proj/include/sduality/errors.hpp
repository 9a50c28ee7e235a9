#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sduality {

/// Base class of everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments: mismatched fields, wrong arity, division by zero, malformed input.
class ValueError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in a polynomial or system description; carries a 0-based offset.
class ParseError : public ValueError {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : ValueError(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Input violates a structural hypothesis (non-square presentation,
/// infinite-dimensional quotient, characteristic 2 in the forms layer, ...).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Floating-point machinery failed (non-converged spectrum, zero count mismatch).
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace sduality
