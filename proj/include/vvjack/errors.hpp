#pragma once

#include <stdexcept>
#include <string>

namespace vvjack {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

// Malformed partitions, tableaux, fillings.
class InvalidShape : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "invalid_shape"; }
};

// Precondition violations on arguments (lengths, ranges, edge preconditions).
class InvalidArgument : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "invalid_argument"; }
};

// kappa hits a pole of some construction: zero denominator or spectral collision.
class InadmissibleKappa : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "inadmissible_kappa"; }
};

// Torus point too close to a collision hyperplane, or the integrator stalled.
class RegularityError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "regularity"; }
};

class NumericError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "numeric"; }
};

}  // namespace vvjack
