#pragma once

// Three rewrites of the m = 3 series for zeta(3).
//
//  SineForm        sum_n 3 pi (-1)^{n-1} w^2 prod_{k=1}^{n} (k + w^2 n) / (n! n^2 sin(pi w^2 n)),
//                  w = omega_3
//  HyperbolicForm  sum_d 3 pi P(d) / ((2d-1)! (2d-1)^3 cosh(sqrt3 pi (2d-1)/2))
//                - sum_d 3 sqrt3 pi Q(d) / (8 sinh(sqrt3 pi d) (2d)! d^2)
//  BetaForm        3 sum_n (-1)^{n-1} B(n/2, n/2) / n^2 + 36 sum_n (-1)^n S_n,
//                  S_n = sum_{k>=0} (-1)^k C(n+k-1, k) / ((n+2k)(3n^2 + (n+2k)^2))
//
// The sine and hyperbolic forms are indexed by n in the same order as the
// m = 3 series: n = 2d-1 is the cosh term of d and n = 2d the sinh term.

#include <string_view>

#include "omega_zeta/acceleration.hpp"
#include "omega_zeta/oracle.hpp"

namespace omega_zeta {

enum class Zeta3Variant { SineForm, HyperbolicForm, BetaForm };

// "sine", "hyperbolic", "beta"
std::string_view variant_tag(Zeta3Variant variant);
// DomainError for anything else.
Zeta3Variant parse_variant(std::string_view tag);

struct HyperbolicFactors {
  long d = 0;
  double p_log = 0.0;  // log P(d) = sum_k log((k - 1/2)^2 + 3/4 (2d-1)^2)
  double q_log = 0.0;  // log Q(d) = sum_k log(k^2 + 3 d^2)
};

// DomainError for d < 1.
double p_poly(long d);
double q_poly(long d);
HyperbolicFactors hyperbolic_factors(long d);

// Residue tolerance on the imaginary part of each sine-form term.
inline constexpr double kSineResidueTolerance = 1e-8;

// Summands in log space; DomainError for index < 1.
SeriesTermTrace sine_form_term(long n);  // NumericalResidueError above tolerance
SeriesTermTrace hyperbolic_cosh_term(long d);
SeriesTermTrace hyperbolic_sinh_term(long d);  // carries the minus sign
SeriesTermTrace hyperbolic_term(long n);
SeriesTermTrace beta_first_term(long n);  // 3 (-1)^{n-1} B(n/2, n/2) / n^2

// S_n from `terms` inner terms. The inner terms grow like k^{n-4}: for n >= 4
// only EulerTransform is accepted (DivergenceError otherwise). The Euler
// transform runs in long double because the difference table cancels
// binomially large entries.
ConvergenceReport beta_inner_sum(long n, int terms, AccelerationMethod method);

// The n-th outer term 3 (-1)^{n-1} B(n/2,n/2)/n^2 + 36 (-1)^n S_n, with the
// inner-sum estimate (times 36) as its error.
struct BetaOuterTerm {
  double value = 0.0;
  double error_estimate = 0.0;
};
BetaOuterTerm beta_outer_term(long n, int inner_terms, AccelerationMethod inner_method);

// zeta(3) from config.max_terms outer terms summed with config.method.
// BetaForm uses config.inner_terms / config.inner_method for each S_n. The
// estimate adds 32 eps sum |t| to the acceleration estimate, and for BetaForm
// the accumulated inner estimates.
ConvergenceReport zeta3_series(Zeta3Variant variant, const PrecisionConfig& config);

}  // namespace omega_zeta
