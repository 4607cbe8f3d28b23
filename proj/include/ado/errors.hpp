#pragma once

#include <stdexcept>
#include <string>

namespace ado {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Malformed braid word or table row.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// The braid closure has more than one component.
class NotAKnotError : public Error {
 public:
  using Error::Error;
};

// The remaining errors signal internal inconsistencies. None of them can fire
// on a correct implementation; they exist so that a bug surfaces loudly.

class SingularBlockError : public Error {
 public:
  using Error::Error;
};

class WeightMixingError : public Error {
 public:
  using Error::Error;
};

class RankDeficiencyError : public Error {
 public:
  using Error::Error;
};

class BasisInconsistencyError : public Error {
 public:
  using Error::Error;
};

class NonScalarError : public Error {
 public:
  using Error::Error;
};

}  // namespace ado
