#pragma once

#include <stdexcept>
#include <string>

namespace z4poset {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of different dimensions were combined.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Poset or ideal parameters outside their admissible ranges.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A dimension cap (materialization or counting) was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// The defining set D came out empty.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// The code has no nonzero codeword.
class DegenerateCodeError : public Error {
 public:
  using Error::Error;
};

}  // namespace z4poset
