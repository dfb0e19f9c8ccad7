#pragma once

#include <stdexcept>

namespace omega_zeta {

// Base of every error raised by the library. The CLI maps the concrete
// subclasses onto exit codes (see tools/commands.cpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain (m < 2, x <= 0, |z| too large, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Argument within tolerance of a pole or zero that the operation cannot cross.
class PoleError : public Error {
 public:
  using Error::Error;
};

// exp of a log-space value whose magnitude is not representable as a double.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Two partial-fraction nodes coincide within tolerance.
class DegenerateNodesError : public Error {
 public:
  using Error::Error;
};

// Chebyshev acceleration requested for a series whose signs do not alternate.
class SignPatternError : public Error {
 public:
  using Error::Error;
};

// Raw summation requested for a series whose terms do not decay.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

// A quantity known to be real came out with an imaginary part above tolerance.
class NumericalResidueError : public Error {
 public:
  using Error::Error;
};

class UnknownConstantError : public Error {
 public:
  using Error::Error;
};

}  // namespace omega_zeta
