#pragma once

// Complex special functions evaluated in double precision, with log-space
// representations for quantities whose magnitude leaves the double range.

#include <complex>
#include <vector>

namespace omega_zeta {

using ComplexValue = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kLnPi = 1.14472988584940017414342735135305871;
inline constexpr double kLn2 = 0.693147180559945309417232121458176568;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

// Largest log-magnitude that exp() can turn into a finite double.
inline constexpr double kMaxLogMagnitude = 709.782712893383973096;

// Distance to a non-positive integer below which log_gamma reports a pole.
inline constexpr double kGammaPoleTolerance = 1e-12;

// A nonzero complex number stored as (log |w|, arg w). The argument is
// normalized to (-pi, pi] on construction. Any valid logarithm of a value
// reproduces it after exponentiation, so products carry no branch tracking.
class LogComplex {
 public:
  LogComplex() = default;
  LogComplex(double log_mag, double arg);

  // Log of a nonzero finite complex value. Throws PoleError for zero.
  static LogComplex from_value(ComplexValue w);
  // Wraps a complex logarithm w = log|v| + i arg v.
  static LogComplex from_log(ComplexValue log_value);

  double log_mag() const { return log_mag_; }
  double arg() const { return arg_; }

  // exp back to a complex value; throws OverflowError above kMaxLogMagnitude.
  // Arguments of exactly 0 or pi yield a value with a zero imaginary part.
  ComplexValue to_complex() const;

  LogComplex conj() const { return LogComplex(log_mag_, -arg_); }
  LogComplex inverse() const { return LogComplex(-log_mag_, -arg_); }

  friend LogComplex operator*(const LogComplex& a, const LogComplex& b) {
    return LogComplex(a.log_mag_ + b.log_mag_, a.arg_ + b.arg_);
  }
  friend LogComplex operator/(const LogComplex& a, const LogComplex& b) {
    return LogComplex(a.log_mag_ - b.log_mag_, a.arg_ - b.arg_);
  }
  LogComplex& operator*=(const LogComplex& other) { return *this = *this * other; }
  LogComplex& operator/=(const LogComplex& other) { return *this = *this / other; }

 private:
  double log_mag_ = 0.0;
  double arg_ = 0.0;
};

// The m-th roots of unity omega_m^j = exp(2 pi i j / m), j = 0..m-1.
// roots[m-j] is the exact conjugate of roots[j]; +-1 and +-i are exact.
struct UnityRoots {
  int m = 0;
  std::vector<ComplexValue> roots;
};

UnityRoots roots_of_unity(int m);

// log Gamma(z). Lanczos (g = 7, 9 coefficients) for Re z >= 1/2 and the
// reflection formula otherwise. Throws PoleError within kGammaPoleTolerance
// of 0, -1, -2, ...
LogComplex log_gamma(ComplexValue z);

// log Gamma(x) for real x, as a LogComplex with arg 0 (Gamma > 0) or pi.
LogComplex log_gamma(double x);

// Gamma(z) = exp(log_gamma(z)); throws OverflowError when not representable.
ComplexValue gamma(ComplexValue z);

// psi(z) = Gamma'(z) / Gamma(z).
ComplexValue digamma(ComplexValue z);

// psi'(x) = sum_{k>=0} 1/(x+k)^2 for x > 0; DomainError otherwise.
double trigamma(double x);

// B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b), through log space.
ComplexValue beta(ComplexValue a, ComplexValue b);

// A logarithm of sin(z). Uses the dominant exponential for large |Im z|, so
// it stays finite where sin itself overflows. PoleError at real multiples of pi.
LogComplex log_sin(ComplexValue z);

// A logarithm of sin(pi z), with the period reduced exactly before scaling.
LogComplex log_sin_pi(ComplexValue z);

// log sinh(x) for x > 0 and log cosh(x) for real x.
double log_sinh(double x);
double log_cosh(double x);

// Integer power by repeated squaring (exact for small integers, deterministic).
template <class T>
T ipow(T base, int exponent) {
  T result{1};
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

}  // namespace omega_zeta
