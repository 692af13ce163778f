#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vne {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class NotUnitary : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// A bound was requested outside the interval on which it is valid.
class OutOfValidityRange : public Error {
 public:
  using Error::Error;
};

class InvalidDimension : public Error {
 public:
  using Error::Error;
};

class NegativeEigenvalue : public Error {
 public:
  using Error::Error;
};

class InvalidProbability : public Error {
 public:
  using Error::Error;
};

class NotSorted : public Error {
 public:
  using Error::Error;
};

class GridTooFine : public Error {
 public:
  using Error::Error;
};

class InfeasibleDeltaMinus : public Error {
 public:
  using Error::Error;
};

class DegenerateDraw : public Error {
 public:
  using Error::Error;
};

/// A scatter record exceeded the sharp bound.  Carries everything needed to
/// reproduce the offending pair.
class BoundViolation : public Error {
 public:
  BoundViolation(std::string msg, std::uint64_t seed, std::int64_t index,
                 double t, double delta, double bound)
      : Error(std::move(msg)),
        seed(seed),
        index(index),
        t(t),
        delta(delta),
        bound(bound) {}

  std::uint64_t seed;
  std::int64_t index;
  double t;
  double delta;
  double bound;
};

}  // namespace vne
