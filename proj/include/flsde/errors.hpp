#pragma once

#include <stdexcept>
#include <string>

namespace flsde {

/// Malformed user input: bad construction arguments, out-of-range query
/// parameters, or an invalid scenario file.
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numeric failure at runtime: overflow, divergence, singular system.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularMatrixError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Integration produced a non-finite state; the message names the time.
class DivergenceError : public NumericError {
 public:
  DivergenceError(const std::string& what, double t) : NumericError(what), time_(t) {}
  double time() const { return time_; }

 private:
  double time_;
};

class UnsupportedDimensionError : public InvalidInputError {
 public:
  using InvalidInputError::InvalidInputError;
};

}  // namespace flsde
