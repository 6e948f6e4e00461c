#pragma once

#include <stdexcept>
#include <string>

namespace gyroshape {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the documented domain (non-finite, non-positive step, ...).
class InvalidInput : public Error
{
public:
  using Error::Error;
};

/// (tau, sigma) share a common factor.
class NotCoprime : public Error
{
public:
  using Error::Error;
};

/// (tau, sigma) violate tau > sigma >= 1.
class PairOrdering : public Error
{
public:
  using Error::Error;
};

/// A root bracket or sign-change pattern did not have the expected structure.
class NumericalStructure : public Error
{
public:
  using Error::Error;
};

/// Operation is undefined for this input class (e.g. asymptotics of a degenerate pair).
class NotApplicable : public Error
{
public:
  using Error::Error;
};

/// Fixed-step integration drifted beyond the requested energy tolerance.
class StepSizeError : public Error
{
public:
  StepSizeError(const std::string& what, double drift)
    : Error(what), measured_drift(drift)
  {
  }

  double measured_drift;
};

}  // namespace gyroshape
