#pragma once

#include <stdexcept>

namespace monoidx {

// Root of every error raised by the library. The CLI maps all of these to
// exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed data: unsorted or duplicate abscissas, non-finite values, too few
// samples.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A parameter outside its admissible range (p < 1, probability outside (0,1],
// non-positive weight parameter, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// A normalized index was requested for an object with zero total variation.
class UndefinedIndex : public Error {
 public:
  using Error::Error;
};

// An ordering was requested where one side has zero total variation.
class UndefinedComparison : public Error {
 public:
  using Error::Error;
};

// Gain-loss or Omega-style ratio of a function with zero L1 mass.
class UndefinedRatio : public Error {
 public:
  using Error::Error;
};

// A weight function whose integral over [0,1] is zero.
class DegenerateWeight : public Error {
 public:
  using Error::Error;
};

}  // namespace monoidx
