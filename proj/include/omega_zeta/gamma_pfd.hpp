#pragma once

// Partial fractions of Gamma(a+z) Gamma(a-z):
//
//   Gamma(a+z) Gamma(a-z) = Gamma(a)^2
//       + sum_{k>=0} (-1)^{k+1} Gamma(2a+k) / ((a+k) k!) * 2z^2 / (z^2 - (a+k)^2)
//
// Raw terms behave like k^{2a-4}, so the plain series diverges once a >= 2.
// Growth is detected at runtime; the Euler transform regularizes it.

#include <functional>
#include <optional>
#include <string>

#include "omega_zeta/acceleration.hpp"
#include "omega_zeta/complex_special.hpp"

namespace omega_zeta {

inline constexpr double kGammaPfdPoleTolerance = 1e-8;

// A sequence a_n (n >= 1) with sum 1/|a_n|^2 < inf, together with F'(-a_n)
// for F(z) = z prod (1 - (z/a_n)^2). fprime_at is supplied in closed form.
struct SymmetricSequence {
  std::string label;
  std::function<ComplexValue(long)> term;
  std::function<ComplexValue(long)> fprime_at;
};

// a_n = n, F(z) = sin(pi z)/pi, F'(-n) = (-1)^n.
SymmetricSequence integer_sequence();

// a_n = a - 1 + n, F'(-a_n) = Gamma(a)^2 (-1)^n (a+n-1) (n-1)! / Gamma(2a+n-1).
// DomainError unless a > 0.
SymmetricSequence shifted_sequence(double a);

struct IdentitySides {
  ComplexValue lhs;  // sum_{n<=N} 1/a_n^2
  ComplexValue rhs;  // sum_{n<=N} -2 / (F'(-a_n) a_n^2)
};

// Truncated sides of sum 1/a_n^2 = -2 sum 1/(F'(-a_n) a_n^2). DomainError for N < 1.
IdentitySides summation_identity_check(const SymmetricSequence& seq, long cutoff);

struct IdentityLimits {
  ComplexValue lhs;
  double lhs_error = 0.0;
  ConvergenceReport rhs;
};

// Limits of both sides: the lhs by two Richardson steps on the partial sums
// at N, 2N, 4N (valid when a_n grows linearly), the rhs by the Euler
// transform of its first rhs_terms terms.
IdentityLimits summation_identity_limits(const SymmetricSequence& seq, long cutoff, int rhs_terms);

// Gamma(a+z) Gamma(a-z) through log space. PoleError, OverflowError.
ComplexValue gamma_pair(ComplexValue a, ComplexValue z);

// prod_{k<=N} (1 - (z/(a-1+k))^2)^{-1} times exp(sum_j z^{2j}/j sum_{k>N} (a-1+k)^{-2j}),
// the first tail sum taken from trigamma. Approximates Gamma(a+z)Gamma(a-z)/Gamma(a)^2.
// DomainError when a is not positive or (a+N)^2 < 4|z|^2; PoleError near z = +-(a-1+k).
ComplexValue modulus_product(double a, ComplexValue z, long cutoff);

// The expansion above with N terms (k = 0..N-1). z enters only through z^2,
// so the result is bit-identical for z and -z.
//
// method == nullopt selects the Euler transform, which is valid in both
// regimes. An explicit NoAcceleration on growing terms throws
// DivergenceError. report.regime is "convergent" or "regularized" according
// to the growth test, whatever the method. DomainError when a is 0, -1, -2, ...;
// PoleError when z is within 1e-8 of +-(a+k).
ConvergenceReport gamma_pfd_series(double a, ComplexValue z, long cutoff,
                                   std::optional<AccelerationMethod> method);

// sum_{n>=1} 1/(q+n)^2 = -2 sum_{n>=1} (-1)^n Gamma(2q+n+1) / (Gamma(q+1)^2 (n-1)! (q+n)^3),
// the right side summed with N terms. Terms behave like n^{2q-2}: when
// 2q >= 1 only the Euler transform is accepted, and any other method throws
// DivergenceError, as does NoAcceleration on terms that fail the growth test.
// nullopt selects the Euler transform. DomainError unless q > -1.
ConvergenceReport inverse_square_series(double q, long cutoff,
                                        std::optional<AccelerationMethod> method);

}  // namespace omega_zeta
