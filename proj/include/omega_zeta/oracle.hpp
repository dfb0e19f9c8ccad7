#pragma once

// Independent reference values. Nothing here uses gamma products or any of
// the root-of-unity series; the zeta values come from the Dirichlet series
// with Euler-Maclaurin corrections only.

#include <string_view>

#include "omega_zeta/acceleration.hpp"

namespace omega_zeta {

struct PrecisionConfig {
  int max_terms = 64;
  double target_abs_error = 1e-12;
  AccelerationMethod method = AccelerationMethod::ChebyshevAlternating;
  bool trace_enabled = false;
  // Inner k-sums of the Beta-function zeta(3) series.
  int inner_terms = 96;
  AccelerationMethod inner_method = AccelerationMethod::EulerTransform;
  // Parallel term evaluation; reductions stay in index order.
  int threads = 1;
};

// Throws DomainError unless max_terms >= 1 and target_abs_error > 0.
void validate(const PrecisionConfig& config);

struct EulerMaclaurinResult {
  double value = 0.0;
  double remainder_bound = 0.0;
};

// zeta(s) = sum_{n<N} n^-s + N^{1-s}/(s-1) + N^-s/2
//           + sum_{j=1}^{J} B_2j/(2j)! (s)_{2j-1} N^{-s-2j+1}
// with the first omitted correction as remainder bound. 1 <= J <= 6.
EulerMaclaurinResult zeta_euler_maclaurin(int s, int cutoff, int corrections);

// zeta(s) for integer s >= 2 (cutoff 20, six corrections). DomainError for s < 2.
double zeta_oracle(int s);

// sum_{i>=0} (q + i)^-s for integer s >= 2 and real q > 0, by direct
// summation up to q >= 20 followed by the same Euler-Maclaurin tail.
double power_tail(int s, double q);

// sum_{n>N} n^-s.
double dirichlet_tail(int s, long cutoff);

// zeta2, zeta3, zeta4, zeta6, euler_gamma, pi. UnknownConstantError otherwise.
double known_constant(std::string_view name);

}  // namespace omega_zeta
