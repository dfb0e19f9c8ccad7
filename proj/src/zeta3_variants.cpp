#include "omega_zeta/zeta3_variants.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "omega_zeta/errors.hpp"
#include "omega_zeta/parallel.hpp"

namespace omega_zeta {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kSqrt3 = 1.73205080756887729352744634150587237;

void require_index(long n, const char* what) {
  if (n < 1) throw DomainError(std::string(what) + " requires index >= 1");
}

SeriesTermTrace make_term(long n, int sign, double log_mag) {
  SeriesTermTrace t;
  t.n = n;
  t.sign = sign;
  t.log_mag = log_mag;
  t.value = sign * std::exp(log_mag);
  return t;
}

double log_factorial(double n) { return log_gamma(n + 1.0).log_mag(); }

// Sums a traced term list with `method` and the shared rounding floor.
ConvergenceReport sum_traced(std::vector<SeriesTermTrace>& trace, AccelerationMethod method) {
  std::vector<double> values(trace.size());
  double magnitude = 0.0;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    values[i] = trace[i].value;
    magnitude += std::abs(values[i]);
  }
  ConvergenceReport report = sum_alternating(std::span<const double>(values), method);
  report.error_estimate += 32.0 * kEps * magnitude;
  return report;
}

}  // namespace

std::string_view variant_tag(Zeta3Variant variant) {
  switch (variant) {
    case Zeta3Variant::SineForm:
      return "sine";
    case Zeta3Variant::HyperbolicForm:
      return "hyperbolic";
    case Zeta3Variant::BetaForm:
      return "beta";
  }
  return "sine";
}

Zeta3Variant parse_variant(std::string_view tag) {
  if (tag == "sine") return Zeta3Variant::SineForm;
  if (tag == "hyperbolic") return Zeta3Variant::HyperbolicForm;
  if (tag == "beta") return Zeta3Variant::BetaForm;
  throw DomainError("unknown zeta(3) variant '" + std::string(tag) + "'");
}

double p_poly(long d) {
  require_index(d, "p_poly");
  const double base = 0.75 * ipow(2.0 * static_cast<double>(d) - 1.0, 2);
  double acc = 0.0;
  for (long k = 1; k <= d; ++k) {
    const double h = static_cast<double>(k) - 0.5;
    acc += std::log(h * h + base);
  }
  return acc;
}

double q_poly(long d) {
  require_index(d, "q_poly");
  const double dd = static_cast<double>(d);
  const double base = 3.0 * dd * dd;
  double acc = 0.0;
  for (long k = 1; k <= d; ++k) {
    const double kd = static_cast<double>(k);
    acc += std::log(kd * kd + base);
  }
  return acc;
}

HyperbolicFactors hyperbolic_factors(long d) { return {d, p_poly(d), q_poly(d)}; }

SeriesTermTrace sine_form_term(long n) {
  require_index(n, "sine_form_term");
  const double nd = static_cast<double>(n);
  const ComplexValue w2 = roots_of_unity(3).roots[2];
  const ComplexValue shift = w2 * nd;

  LogComplex acc(std::log(3.0 * kPi), 0.0);
  acc *= LogComplex::from_value(w2);
  for (long k = 1; k <= n; ++k) acc *= LogComplex::from_value(static_cast<double>(k) + shift);
  acc /= log_gamma(nd + 1.0);
  acc /= LogComplex(2.0 * std::log(nd), 0.0);
  acc /= log_sin_pi(shift);

  const double residue = std::sin(acc.arg());
  if (std::abs(residue) > kSineResidueTolerance) {
    throw NumericalResidueError("sine-form term " + std::to_string(n) +
                                " has relative imaginary part " + std::to_string(residue));
  }
  const double cosine = std::cos(acc.arg());
  const int parity = (n % 2 == 1) ? 1 : -1;
  return make_term(n, parity * (cosine < 0.0 ? -1 : 1),
                   acc.log_mag() + std::log(std::abs(cosine)));
}

SeriesTermTrace hyperbolic_cosh_term(long d) {
  require_index(d, "hyperbolic_cosh_term");
  const double odd = 2.0 * static_cast<double>(d) - 1.0;
  const double log_mag = std::log(3.0 * kPi) + p_poly(d) - log_factorial(odd) -
                         3.0 * std::log(odd) - log_cosh(kSqrt3 * kPi * odd / 2.0);
  return make_term(2 * d - 1, 1, log_mag);
}

SeriesTermTrace hyperbolic_sinh_term(long d) {
  require_index(d, "hyperbolic_sinh_term");
  const double dd = static_cast<double>(d);
  const double log_mag = std::log(3.0 * kSqrt3 * kPi / 8.0) + q_poly(d) -
                         log_sinh(kSqrt3 * kPi * dd) - log_factorial(2.0 * dd) -
                         2.0 * std::log(dd);
  return make_term(2 * d, -1, log_mag);
}

SeriesTermTrace hyperbolic_term(long n) {
  require_index(n, "hyperbolic_term");
  return (n % 2 == 1) ? hyperbolic_cosh_term((n + 1) / 2) : hyperbolic_sinh_term(n / 2);
}

SeriesTermTrace beta_first_term(long n) {
  require_index(n, "beta_first_term");
  const double nd = static_cast<double>(n);
  // B(n/2, n/2) = Gamma(n/2)^2 / Gamma(n)
  const double log_beta = 2.0 * log_gamma(0.5 * nd).log_mag() - log_gamma(nd).log_mag();
  const int parity = (n % 2 == 1) ? 1 : -1;
  return make_term(n, parity, std::log(3.0) + log_beta - 2.0 * std::log(nd));
}

ConvergenceReport beta_inner_sum(long n, int terms, AccelerationMethod method) {
  require_index(n, "beta_inner_sum");
  if (terms < 1) throw DomainError("beta_inner_sum needs at least one term");
  if (n >= 4 && method != AccelerationMethod::EulerTransform) {
    throw DivergenceError("beta inner sum for n = " + std::to_string(n) +
                          " diverges classically; it needs the Euler transform");
  }
  const long three_n2 = 3 * n * n;
  if (method == AccelerationMethod::EulerTransform) {
    std::vector<ExtendedReal> t(static_cast<std::size_t>(terms));
    ExtendedReal binomial = 1;  // C(n+k-1, k)
    for (int k = 0; k < terms; ++k) {
      if (k > 0) binomial = binomial * (n + k - 1) / k;
      const long j = n + 2L * k;
      ExtendedReal value = binomial / (ExtendedReal(j) * ExtendedReal(three_n2 + j * j));
      t[static_cast<std::size_t>(k)] = (k % 2 == 0) ? value : ExtendedReal(-value);
    }
    return euler_transform_extended(std::span<const ExtendedReal>(t));
  }
  std::vector<double> t(static_cast<std::size_t>(terms));
  double binomial = 1.0;
  for (int k = 0; k < terms; ++k) {
    if (k > 0) binomial = binomial * static_cast<double>(n + k - 1) / k;
    const double j = static_cast<double>(n + 2L * k);
    const double value = binomial / (j * (static_cast<double>(three_n2) + j * j));
    t[static_cast<std::size_t>(k)] = (k % 2 == 0) ? value : -value;
  }
  return sum_alternating(std::span<const double>(t), method);
}

BetaOuterTerm beta_outer_term(long n, int inner_terms, AccelerationMethod inner_method) {
  const SeriesTermTrace first = beta_first_term(n);
  const ConvergenceReport inner = beta_inner_sum(n, inner_terms, inner_method);
  const double parity = (n % 2 == 0) ? 1.0 : -1.0;
  const double second = 36.0 * parity * inner.value;
  return {first.value + second,
          36.0 * inner.error_estimate + 2.0 * kEps * (std::abs(first.value) + std::abs(second))};
}

ConvergenceReport zeta3_series(Zeta3Variant variant, const PrecisionConfig& config) {
  validate(config);
  const auto count = static_cast<std::size_t>(config.max_terms);

  if (variant != Zeta3Variant::BetaForm) {
    std::vector<SeriesTermTrace> trace(count);
    parallel_for(count, config.threads, [&](std::size_t i) {
      const long n = static_cast<long>(i) + 1;
      trace[i] = (variant == Zeta3Variant::SineForm) ? sine_form_term(n) : hyperbolic_term(n);
    });
    ConvergenceReport report = sum_traced(trace, config.method);
    report.regime = "convergent";
    if (config.trace_enabled) {
      trace.resize(static_cast<std::size_t>(report.terms_used));
      report.trace = std::move(trace);
    }
    return report;
  }

  // 3 sum (-1)^{n-1} B/n^2 and 36 sum (-1)^n S_n are accelerated separately.
  std::vector<SeriesTermTrace> first(count);
  std::vector<double> second(count);
  std::vector<double> inner_error(count);
  parallel_for(count, config.threads, [&](std::size_t i) {
    const long n = static_cast<long>(i) + 1;
    first[i] = beta_first_term(n);
    const ConvergenceReport inner = beta_inner_sum(n, config.inner_terms, config.inner_method);
    second[i] = 36.0 * ((n % 2 == 0) ? 1.0 : -1.0) * inner.value;
    inner_error[i] = 36.0 * inner.error_estimate;
  });
  ConvergenceReport report = sum_traced(first, config.method);
  ConvergenceReport tail = sum_alternating(std::span<const double>(second), config.method);
  double magnitude = 0.0;
  double inner_total = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    magnitude += std::abs(second[i]);
    inner_total += inner_error[i];
  }
  report.value += tail.value;
  report.error_estimate += tail.error_estimate + inner_total + 32.0 * kEps * magnitude;
  report.terms_used = std::max(report.terms_used, tail.terms_used);
  report.regime = "regularized";
  if (config.trace_enabled) {
    std::vector<SeriesTermTrace> trace(count);
    for (std::size_t i = 0; i < count; ++i) {
      const double value = first[i].value + second[i];
      SeriesTermTrace& t = trace[i];
      t.n = static_cast<long>(i) + 1;
      t.value = value;
      t.sign = value < 0.0 ? -1 : 1;
      t.log_mag = value == 0.0 ? -std::numeric_limits<double>::max() : std::log(std::abs(value));
    }
    trace.resize(static_cast<std::size_t>(report.terms_used));
    report.trace = std::move(trace);
  }
  return report;
}

}  // namespace omega_zeta
