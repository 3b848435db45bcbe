#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isrht {

// Base class for every error this library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shape or size mismatch, e.g. a transform length that is not a power of two.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An argument outside its valid range (r < 1, r > d, non-positive C, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Structurally valid input the algorithm cannot work with: an all-zero matrix
// for norm sampling, single-class labels, folds that lose a class, ...
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

// Malformed text input; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Filesystem failures.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace isrht
