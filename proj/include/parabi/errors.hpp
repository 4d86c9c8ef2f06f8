#pragma once

#include <stdexcept>
#include <string>

namespace parabi {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Caller passed an out-of-range or malformed argument.
class ArgumentError : public Error {
public:
  using Error::Error;
};

/// A formula denominator vanishes at the requested parameters.
class SingularParameterError : public Error {
public:
  using Error::Error;
};

/// alpha = 0 or alpha = 1 reached a branch that divides by alpha or 1 - alpha.
class DegenerateDeformationError : public Error {
public:
  using Error::Error;
};

/// Operator evaluated at a point where one of its coefficients has a pole.
class PoleError : public Error {
public:
  using Error::Error;
};

/// Grid points coincide.
class DegenerateSpectrumError : public Error {
public:
  using Error::Error;
};

/// Parameters outside the regime a routine is defined for.
class RegimeError : public Error {
public:
  using Error::Error;
};

/// Broken internal invariant; reaching this is a bug.
class InternalError : public Error {
public:
  using Error::Error;
};

}  // namespace parabi
