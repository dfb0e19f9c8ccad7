#include "omega_zeta/gamma_pfd.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "omega_zeta/errors.hpp"
#include "omega_zeta/kernels.hpp"
#include "omega_zeta/oracle.hpp"

namespace omega_zeta {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTailCutoff = 1e-18;

bool is_nonpositive_integer(double a) { return a <= 0.0 && a == std::round(a); }

// Gamma(x) / Gamma(y) for real x, y as sign * exp(log ratio).
double gamma_ratio(double x, double y) {
  const LogComplex ratio = log_gamma(x) / log_gamma(y);
  return ratio.to_complex().real();
}

std::vector<double> magnitudes(const std::vector<ComplexValue>& terms) {
  std::vector<double> out(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) out[i] = std::abs(terms[i]);
  return out;
}

// Shared by both expansions: runs the growth test and sums; nullopt means
// the Euler transform.
ConvergenceReport sum_with_regime(const std::vector<ComplexValue>& terms,
                                  std::optional<AccelerationMethod> method,
                                  const std::string& what) {
  const std::vector<double> mags = magnitudes(terms);
  const bool decays = terms_decay(mags);
  const AccelerationMethod chosen = method.value_or(AccelerationMethod::EulerTransform);
  if (chosen == AccelerationMethod::NoAcceleration && !decays) {
    throw DivergenceError(what + ": raw terms do not decay; use the Euler transform");
  }
  ConvergenceReport report = sum_alternating(std::span<const ComplexValue>(terms), chosen);
  double magnitude = 0.0;
  for (double v : mags) magnitude += v;
  report.error_estimate += 4.0 * kEps * magnitude;
  report.regime = decays ? "convergent" : "regularized";
  return report;
}

}  // namespace

SymmetricSequence integer_sequence() {
  SymmetricSequence seq;
  seq.label = "a_n = n";
  seq.term = [](long n) { return ComplexValue(static_cast<double>(n), 0.0); };
  seq.fprime_at = [](long n) { return ComplexValue(n % 2 == 0 ? 1.0 : -1.0, 0.0); };
  return seq;
}

SymmetricSequence shifted_sequence(double a) {
  if (!(a > 0.0)) throw DomainError("shifted_sequence requires a > 0");
  SymmetricSequence seq;
  seq.label = "a_n = " + std::to_string(a) + " - 1 + n";
  seq.term = [a](long n) { return ComplexValue(a - 1.0 + static_cast<double>(n), 0.0); };
  const LogComplex gamma_a_squared = log_gamma(a) * log_gamma(a);
  seq.fprime_at = [a, gamma_a_squared](long n) {
    const double nd = static_cast<double>(n);
    // (n-1)! / Gamma(2a+n-1) in log space; the quotient itself is moderate.
    const LogComplex ratio = gamma_a_squared * log_gamma(nd) / log_gamma(2.0 * a + nd - 1.0);
    const double parity = (n % 2 == 0) ? 1.0 : -1.0;
    return ComplexValue(parity * (a + nd - 1.0) * ratio.to_complex().real(), 0.0);
  };
  return seq;
}

IdentitySides summation_identity_check(const SymmetricSequence& seq, long cutoff) {
  if (cutoff < 1) throw DomainError("summation_identity_check needs N >= 1");
  IdentitySides sides{{0.0, 0.0}, {0.0, 0.0}};
  for (long n = 1; n <= cutoff; ++n) {
    const ComplexValue a = seq.term(n);
    const ComplexValue a2 = a * a;
    sides.lhs += 1.0 / a2;
    sides.rhs += -2.0 / (seq.fprime_at(n) * a2);
  }
  return sides;
}

IdentityLimits summation_identity_limits(const SymmetricSequence& seq, long cutoff,
                                         int rhs_terms) {
  if (cutoff < 1) throw DomainError("summation_identity_limits needs N >= 1");
  if (rhs_terms < 1) throw DomainError("summation_identity_limits needs rhs_terms >= 1");
  // S(N), S(2N), S(4N) in one ascending pass.
  ComplexValue s1, s2, s4;
  ComplexValue acc(0.0, 0.0);
  for (long n = 1; n <= 4 * cutoff; ++n) {
    const ComplexValue a = seq.term(n);
    acc += 1.0 / (a * a);
    if (n == cutoff) s1 = acc;
    if (n == 2 * cutoff) s2 = acc;
  }
  s4 = acc;
  // Tail ~ c1/N + c2/N^2: eliminate both orders.
  const ComplexValue r1 = 2.0 * s2 - s1;
  const ComplexValue r2 = 2.0 * s4 - s2;
  const ComplexValue limit = (4.0 * r2 - r1) / 3.0;

  std::vector<double> re(static_cast<std::size_t>(rhs_terms));
  for (int n = 1; n <= rhs_terms; ++n) {
    const ComplexValue a = seq.term(n);
    re[static_cast<std::size_t>(n - 1)] = (-2.0 / (seq.fprime_at(n) * a * a)).real();
  }
  IdentityLimits out;
  out.lhs = limit;
  out.lhs_error = std::abs(limit - r2) + 8.0 * kEps * std::abs(s4) * static_cast<double>(cutoff);
  out.rhs = sum_alternating(std::span<const double>(re), AccelerationMethod::EulerTransform);
  return out;
}

ComplexValue gamma_pair(ComplexValue a, ComplexValue z) {
  return (log_gamma(a + z) * log_gamma(a - z)).to_complex();
}

ComplexValue modulus_product(double a, ComplexValue z, long cutoff) {
  if (!(a > 0.0)) throw DomainError("modulus_product requires a > 0");
  if (cutoff < 1) throw DomainError("modulus_product needs N >= 1");
  const ComplexValue w = z * z;
  const double edge = a + static_cast<double>(cutoff);
  if (edge * edge < 4.0 * std::abs(w)) {
    throw DomainError("modulus_product needs (a+N)^2 >= 4|z|^2");
  }
  for (long k = 1; k <= cutoff; ++k) {
    const double node = a - 1.0 + static_cast<double>(k);
    if (std::abs(z - node) < kGammaPfdPoleTolerance || std::abs(z + node) < kGammaPfdPoleTolerance) {
      throw PoleError("modulus_product: z is within tolerance of +-(a-1+k), k = " +
                      std::to_string(k));
    }
    if (node > std::abs(z) + 1.0) break;
  }
  const ComplexValue head = kernels::reciprocal_factor_product(w, a - 1.0, 2, 1, cutoff);
  // sum_{k>N} (a-1+k)^{-2j} = sum_{i>=0} (a+N+i)^{-2j}
  ComplexValue tail(0.0, 0.0);
  ComplexValue power(1.0, 0.0);
  for (int j = 1; j <= 200; ++j) {
    power *= w;
    const double inner = (j == 1) ? trigamma(edge) : power_tail(2 * j, edge);
    const ComplexValue term = power * (inner / j);
    tail += term;
    if (std::abs(term) < kTailCutoff) break;
  }
  return head * std::exp(tail);
}

ConvergenceReport gamma_pfd_series(double a, ComplexValue z, long cutoff,
                                   std::optional<AccelerationMethod> method) {
  if (is_nonpositive_integer(a)) {
    throw DomainError("gamma_pfd_series: a must not be 0, -1, -2, ...");
  }
  if (cutoff < 1) throw DomainError("gamma_pfd_series needs N >= 1");
  const ComplexValue w = z * z;
  const double abs_w = std::abs(w);

  std::vector<ComplexValue> terms(static_cast<std::size_t>(cutoff));
  for (long k = 0; k < cutoff; ++k) {
    const double ak = a + static_cast<double>(k);
    const ComplexValue denominator = w - ak * ak;
    // |z^2 - (a+k)^2| = |z - (a+k)| |z + (a+k)|
    if (std::abs(denominator) < kGammaPfdPoleTolerance * (std::sqrt(abs_w) + std::abs(ak))) {
      throw PoleError("gamma_pfd_series: z is within tolerance of +-(a+k), k = " +
                      std::to_string(k));
    }
    if (abs_w == 0.0) {
      terms[static_cast<std::size_t>(k)] = {0.0, 0.0};
      continue;
    }
    const double parity = (k % 2 == 0) ? -1.0 : 1.0;
    const double coefficient = parity * gamma_ratio(2.0 * a + static_cast<double>(k),
                                                    static_cast<double>(k) + 1.0) / ak;
    terms[static_cast<std::size_t>(k)] = coefficient * (2.0 * w / denominator);
  }

  ConvergenceReport report = sum_with_regime(terms, method, "gamma_pfd_series");
  const LogComplex log_gamma_a = log_gamma(a);
  const double base = (log_gamma_a * log_gamma_a).to_complex().real();
  report.value += base;
  report.error_estimate += 4.0 * kEps * std::abs(base);
  return report;
}

ConvergenceReport inverse_square_series(double q, long cutoff,
                                        std::optional<AccelerationMethod> method) {
  if (!(q > -1.0)) throw DomainError("inverse_square_series requires q > -1");
  if (cutoff < 1) throw DomainError("inverse_square_series needs N >= 1");
  if (2.0 * q >= 1.0 && method && *method != AccelerationMethod::EulerTransform) {
    throw DivergenceError("inverse_square_series: terms grow like n^{2q-2}; q >= 1/2 needs the "
                          "Euler transform");
  }
  const LogComplex log_gamma_q1 = log_gamma(q + 1.0);
  const LogComplex gamma_q1_squared = log_gamma_q1 * log_gamma_q1;
  std::vector<ComplexValue> terms(static_cast<std::size_t>(cutoff));
  for (long n = 1; n <= cutoff; ++n) {
    const double nd = static_cast<double>(n);
    const LogComplex ratio = log_gamma(2.0 * q + nd + 1.0) / (gamma_q1_squared * log_gamma(nd));
    const double parity = (n % 2 == 0) ? 1.0 : -1.0;
    const double qn = q + nd;
    terms[static_cast<std::size_t>(n - 1)] = {-2.0 * parity * ratio.to_complex().real() / (qn * qn * qn),
                                              0.0};
  }
  ConvergenceReport report = sum_with_regime(terms, method, "inverse_square_series");
  if (2.0 * q >= 1.0) report.regime = "regularized";
  return report;
}

}  // namespace omega_zeta
