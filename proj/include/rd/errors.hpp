#pragma once

#include <stdexcept>
#include <string>

namespace rd {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldMismatch : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

struct AlgebraMismatch : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct InvalidInput : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct UnsupportedLevel : Error {
  using Error::Error;
};

struct SpaceTooLarge : Error {
  using Error::Error;
};

// Malformed or self-inconsistent input files (distinct from a predicate
// that merely evaluates to false).
struct ParseError : Error {
  using Error::Error;
};

}  // namespace rd
