#pragma once

// Summation of (possibly divergent) alternating series with an error estimate.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "omega_zeta/complex_special.hpp"

namespace omega_zeta {

enum class AccelerationMethod {
  NoAcceleration,
  EulerTransform,
  // Cohen, Rodriguez Villegas and Zagier, Algorithm 1.
  ChebyshevAlternating,
};

// "none", "euler", "cvz"
std::string_view method_tag(AccelerationMethod method);
// Inverse of method_tag; DomainError for anything else.
AccelerationMethod parse_method(std::string_view tag);

// One summand of a series. value is sign * exp(log_mag); it is 0 when that
// underflows, and log_mag stays finite.
struct SeriesTermTrace {
  long n = 0;
  double value = 0.0;
  double log_mag = 0.0;
  int sign = 1;
};

struct ConvergenceReport {
  double value = 0.0;
  // Nonzero only for series with complex terms (gamma_pfd_series).
  double value_im = 0.0;
  int terms_used = 0;
  // Absolute; an estimate, not a rigorous bound.
  double error_estimate = 0.0;
  AccelerationMethod method = AccelerationMethod::NoAcceleration;
  std::vector<SeriesTermTrace> trace;
  // "convergent", "regularized" or empty when not applicable.
  std::string regime;

  ComplexValue complex_value() const { return {value, value_im}; }
};

// Sums terms[0] + terms[1] + ... with the requested method.
//
//  NoAcceleration       plain ascending sum; estimate |last term|.
//  EulerTransform       sum_k (-1)^k Delta^k b_0 / 2^{k+1} with b_k = (-1)^k t_k,
//                       truncated where |next transformed term| plus the
//                       accumulated rounding noise is smallest; estimate is
//                       that quantity.
//  ChebyshevAlternating requires nonzero terms to alternate with the index
//                       parity (zeros from underflow are allowed); estimate
//                       2 |t_0| / 5.83^n plus a rounding floor.
//
// Throws SignPatternError (Chebyshev on non-alternating input) and
// DomainError on an empty list.
ConvergenceReport sum_alternating(std::span<const double> terms, AccelerationMethod method);

// Applies sum_alternating to the real and imaginary parts separately; the
// estimate is the hypot of the two. The imaginary part is skipped when all of
// its entries are zero.
ConvergenceReport sum_alternating(std::span<const ComplexValue> terms, AccelerationMethod method);

// 113-bit binary floating point (header-only Boost.Multiprecision).
using ExtendedReal = boost::multiprecision::cpp_bin_float_quad;

// EulerTransform carried out in ExtendedReal, for terms whose difference
// table cancels heavily (binomially growing summands). The value and
// estimate are rounded to double at the end.
ConvergenceReport euler_transform_extended(std::span<const ExtendedReal> terms);

// Runtime decay test for raw summation: false when the mean magnitude over
// the last quarter of the list is not clearly below that of the third
// quarter. Lists shorter than 8 entries, and all-zero tails, count as decaying.
bool terms_decay(std::span<const double> magnitudes);

}  // namespace omega_zeta
