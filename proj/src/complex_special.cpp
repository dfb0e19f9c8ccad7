#include "omega_zeta/complex_special.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "omega_zeta/errors.hpp"

namespace omega_zeta {
namespace {

constexpr double kHalfLog2Pi = 0.918938533204672741780329736405617640;
constexpr double kTwoPi = 2.0 * kPi;

// Lanczos g = 7, n = 9 (Godfrey).
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// B_2k for k = 1..7.
constexpr std::array<double, 7> kBernoulliEven = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0};

double normalize_arg(double arg) {
  if (!std::isfinite(arg)) return arg;
  double r = std::remainder(arg, kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  return r;
}

bool near_gamma_pole(ComplexValue z) {
  if (z.real() > 0.5) return false;
  const double nearest = std::round(z.real());
  return std::abs(z - ComplexValue(nearest, 0.0)) < kGammaPoleTolerance;
}

[[noreturn]] void throw_gamma_pole(ComplexValue z) {
  throw PoleError("gamma pole at z = (" + std::to_string(z.real()) + ", " +
                  std::to_string(z.imag()) + ")");
}

// log Gamma(z) for Re z >= 1/2 as a complex logarithm.
ComplexValue lanczos_log_gamma(ComplexValue z) {
  z -= 1.0;
  ComplexValue sum(kLanczos[0], 0.0);
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    sum += kLanczos[i] / (z + static_cast<double>(i));
  }
  const ComplexValue t = z + (kLanczosG + 0.5);
  return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(sum);
}

// sin(pi r) and cos(pi r) for r in [-1, 1], folded so the argument handed to
// std::sin / std::cos stays within [-pi/4, pi/4].
void sincos_pi(double r, double& s, double& c) {
  const double sign = r < 0.0 ? -1.0 : 1.0;
  const double a = std::abs(r);
  if (a <= 0.25) {
    s = std::sin(kPi * a);
    c = std::cos(kPi * a);
  } else if (a <= 0.75) {
    const double d = a - 0.5;
    s = std::cos(kPi * d);
    c = -std::sin(kPi * d);
  } else {
    const double d = 1.0 - a;
    s = std::sin(kPi * d);
    c = -std::cos(kPi * d);
  }
  s *= sign;
}

// log sin(x + iy) given sin x and cos x.
LogComplex log_sin_parts(double sx, double cx, double y) {
  const double ay = std::abs(y);
  if (ay <= 20.0) {
    const ComplexValue s(sx * std::cosh(y), cx * std::sinh(y));
    if (s == ComplexValue(0.0, 0.0)) throw PoleError("log_sin: zero of sin");
    return LogComplex::from_value(s);
  }
  // For y > 0: sin(x+iy) = (e^y / 2) (sin x + i cos x) (1 - e^{-2y} e^{2ix}).
  const double e = std::exp(-2.0 * ay);
  const ComplexValue phase(sx, cx);
  const ComplexValue correction(1.0 - e * (cx * cx - sx * sx), -e * 2.0 * sx * cx);
  const ComplexValue unit = phase * correction;
  LogComplex result(ay - kLn2 + std::log(std::abs(unit)), std::arg(unit));
  return y > 0.0 ? result : result.conj();
}

}  // namespace

LogComplex::LogComplex(double log_mag, double arg) : log_mag_(log_mag), arg_(normalize_arg(arg)) {}

LogComplex LogComplex::from_value(ComplexValue w) {
  if (w == ComplexValue(0.0, 0.0)) throw PoleError("logarithm of zero");
  return LogComplex(std::log(std::abs(w)), std::arg(w));
}

LogComplex LogComplex::from_log(ComplexValue log_value) {
  return LogComplex(log_value.real(), log_value.imag());
}

ComplexValue LogComplex::to_complex() const {
  if (log_mag_ > kMaxLogMagnitude) {
    throw OverflowError("log-magnitude " + std::to_string(log_mag_) +
                        " exceeds the double range");
  }
  const double mag = std::exp(log_mag_);
  if (arg_ == 0.0) return {mag, 0.0};
  if (arg_ == kPi) return {-mag, 0.0};
  return {mag * std::cos(arg_), mag * std::sin(arg_)};
}

UnityRoots roots_of_unity(int m) {
  if (m < 2) throw DomainError("roots_of_unity requires m >= 2, got " + std::to_string(m));
  UnityRoots out;
  out.m = m;
  out.roots.resize(static_cast<std::size_t>(m));
  for (int j = 0; 2 * j <= m; ++j) {
    ComplexValue w;
    if (j == 0) {
      w = {1.0, 0.0};
    } else if (2 * j == m) {
      w = {-1.0, 0.0};
    } else if (4 * j == m) {
      w = {0.0, 1.0};
    } else {
      // angle = 2 pi j / m = pi r with r in (0, 1)
      double s = 0.0, c = 0.0;
      sincos_pi(2.0 * j / m, s, c);
      w = {c, s};
    }
    out.roots[static_cast<std::size_t>(j)] = w;
    if (j != 0 && 2 * j != m) out.roots[static_cast<std::size_t>(m - j)] = std::conj(w);
  }
  return out;
}

LogComplex log_gamma(ComplexValue z) {
  if (near_gamma_pole(z)) throw_gamma_pole(z);
  if (z.real() >= 0.5) return LogComplex::from_log(lanczos_log_gamma(z));
  // Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
  const LogComplex s = log_sin_pi(z);
  const LogComplex g = LogComplex::from_log(lanczos_log_gamma(1.0 - z));
  return LogComplex(kLnPi - s.log_mag() - g.log_mag(), -s.arg() - g.arg());
}

LogComplex log_gamma(double x) {
  if (near_gamma_pole(ComplexValue(x, 0.0))) throw_gamma_pole(ComplexValue(x, 0.0));
  int sign = 1;
  const double value = ::lgamma_r(x, &sign);
  return LogComplex(value, sign < 0 ? kPi : 0.0);
}

ComplexValue gamma(ComplexValue z) {
  const ComplexValue g = log_gamma(z).to_complex();
  if (z.imag() == 0.0) return {g.real(), 0.0};
  return g;
}

ComplexValue digamma(ComplexValue z) {
  if (near_gamma_pole(z)) throw_gamma_pole(z);
  ComplexValue acc(0.0, 0.0);
  if (z.real() < 0.5) {
    // psi(z) = psi(1 - z) - pi cot(pi z); cot has period 1.
    const double shift = std::round(z.real());
    const ComplexValue w(kPi * (z.real() - shift), kPi * z.imag());
    acc -= kPi / std::tan(w);
    z = 1.0 - z;
  }
  while (z.real() < 10.0) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  const ComplexValue inv2 = 1.0 / (z * z);
  ComplexValue series(0.0, 0.0);
  ComplexValue power = inv2;
  for (std::size_t k = 0; k < kBernoulliEven.size(); ++k) {
    series += kBernoulliEven[k] / (2.0 * static_cast<double>(k + 1)) * power;
    power *= inv2;
  }
  return acc + std::log(z) - 0.5 / z - series;
}

double trigamma(double x) {
  if (!(x > 0.0)) throw DomainError("trigamma requires x > 0, got " + std::to_string(x));
  double acc = 0.0;
  while (x < 10.0) {
    acc += 1.0 / (x * x);
    x += 1.0;
  }
  // psi'(x) ~ 1/x + 1/(2x^2) + sum_k B_2k / x^{2k+1}
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  double power = inv * inv2;
  for (double b : kBernoulliEven) {
    series += b * power;
    power *= inv2;
  }
  return acc + inv + 0.5 * inv2 + series;
}

ComplexValue beta(ComplexValue a, ComplexValue b) {
  const LogComplex value = log_gamma(a) * log_gamma(b) / log_gamma(a + b);
  return value.to_complex();
}

LogComplex log_sin(ComplexValue z) {
  if (std::abs(z.imag()) < 1e-12 && std::abs(std::sin(z.real())) < 1e-12) {
    throw PoleError("log_sin at a real multiple of pi");
  }
  return log_sin_parts(std::sin(z.real()), std::cos(z.real()), z.imag());
}

LogComplex log_sin_pi(ComplexValue z) {
  const double r = z.real() - 2.0 * std::round(0.5 * z.real());
  double s = 0.0, c = 0.0;
  sincos_pi(r, s, c);
  if (std::abs(z.imag()) < 1e-12 && std::abs(s) < kPi * 1e-12) {
    throw PoleError("log_sin_pi at an integer");
  }
  return log_sin_parts(s, c, kPi * z.imag());
}

double log_sinh(double x) {
  if (!(x > 0.0)) throw DomainError("log_sinh requires x > 0");
  if (x <= 20.0) return std::log(std::sinh(x));
  return x - kLn2 + std::log1p(-std::exp(-2.0 * x));
}

double log_cosh(double x) {
  const double ax = std::abs(x);
  if (ax <= 20.0) return std::log(std::cosh(ax));
  return ax - kLn2 + std::log1p(std::exp(-2.0 * ax));
}

}  // namespace omega_zeta
