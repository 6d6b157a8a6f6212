#pragma once

#include <stdexcept>
#include <string>

namespace gnkb {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid (n, k, b) or other malformed scalar input.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Malformed vertex tuple, self-loop query, or arguments in the wrong order.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Operation requested outside the regime where it is defined
/// (wrong case ordering, beta > 1/2, empty central set, disconnected graph).
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// A numbering that is not a bijection onto 1..|V|.
class NumberingError : public Error {
 public:
  using Error::Error;
};

/// Self-intersecting polygon, polygon leaving the domain, etc.
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// Instance too large for an exact or materializing routine.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Input text that does not follow a documented format.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace gnkb
