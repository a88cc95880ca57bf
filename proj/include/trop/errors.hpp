#pragma once

#include <stdexcept>
#include <string>

namespace trop {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or mathematically inadmissible input.
struct InvalidInput : Error {
  using Error::Error;
};

// An internal consistency check failed. For valid inputs this cannot happen;
// it indicates either a corrupted input file or a bug.
struct VerificationError : Error {
  using Error::Error;
};

struct ZeroHasNoValuation : InvalidInput {
  ZeroHasNoValuation() : InvalidInput("valuation of zero is undefined") {}
};

struct NotPrime : InvalidInput {
  explicit NotPrime(const std::string& what) : InvalidInput(what) {}
};

struct DivisionByZeroPoly : InvalidInput {
  DivisionByZeroPoly() : InvalidInput("polynomial division by zero") {}
};

struct BothZero : InvalidInput {
  BothZero() : InvalidInput("gcd of two zero polynomials is undefined") {}
};

struct ZeroInput : InvalidInput {
  explicit ZeroInput(const std::string& what = "zero polynomial not allowed")
      : InvalidInput(what) {}
};

// The constant term vanishes, i.e. the polynomial has a root at the origin.
// Inputs with solutions outside the torus are rejected, never repaired.
struct ZeroConstantTerm : InvalidInput {
  ZeroConstantTerm() : InvalidInput("constant term is zero (root at the origin, input not saturated)") {}
};

struct NonInvertible : InvalidInput {
  explicit NonInvertible(const std::string& what = "element is not invertible in the quotient ring")
      : InvalidInput(what) {}
};

struct ZeroCoordinate : InvalidInput {
  ZeroCoordinate() : InvalidInput("a solution has a zero coordinate (input not saturated)") {}
};

struct InvalidArity : InvalidInput {
  explicit InvalidArity(const std::string& what) : InvalidInput(what) {}
};

struct ParseError : InvalidInput {
  explicit ParseError(const std::string& what) : InvalidInput(what) {}
};

// Pullback matching failed while gluing projections.
struct GlueMismatch : VerificationError {
  explicit GlueMismatch(const std::string& what) : VerificationError(what) {}
};

}  // namespace trop
