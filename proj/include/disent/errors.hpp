#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace disent {

// Base for every error raised by the library. Callers that only care about
// "something in disent failed" can catch this.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
  using Error::Error;
};

class NotHermitianError : public Error {
public:
  using Error::Error;
};

class NonUnitaryError : public Error {
public:
  using Error::Error;
};

// Raised by simultaneous diagonalization when two members of the family do
// not commute.
class NonCommutingError : public Error {
public:
  NonCommutingError(std::size_t first, std::size_t second, double residual);

  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }
  double residual() const { return residual_; }

private:
  std::size_t first_;
  std::size_t second_;
  double residual_;
};

// A matrix or vector that should describe a physical state does not.
class InvalidStateError : public Error {
public:
  using Error::Error;
};

// The separability test was asked about dimensions where the PPT test is
// only a necessary condition.
class UnsupportedDimsError : public Error {
public:
  using Error::Error;
};

class PreconditionViolated : public Error {
public:
  using Error::Error;
};

class IdentifyError : public Error {
public:
  enum class Kind { NoMatch, Ambiguous };

  IdentifyError(Kind kind, const std::string& what);

  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

} // namespace disent
