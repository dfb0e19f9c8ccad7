#include "omega_zeta/acceleration.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "omega_zeta/errors.hpp"

namespace omega_zeta {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kCvzBase = 5.82842712474619009760337744841939616;  // 3 + sqrt(8)

ConvergenceReport plain_sum(std::span<const double> terms) {
  ConvergenceReport report;
  report.method = AccelerationMethod::NoAcceleration;
  double sum = 0.0;
  for (double t : terms) sum += t;
  report.value = sum;
  report.terms_used = static_cast<int>(terms.size());
  report.error_estimate = std::abs(terms.back());
  return report;
}

template <class Real>
ConvergenceReport euler_sum(std::span<const Real> terms) {
  using std::abs;
  const Real kUnit = std::numeric_limits<Real>::epsilon();
  ConvergenceReport report;
  report.method = AccelerationMethod::EulerTransform;

  const std::size_t count = terms.size();
  // diag[j] holds Delta^j b_{k-j} after b_k has been absorbed; abs_diag the
  // same recurrence on |b|, which bounds the rounding in each difference.
  std::vector<Real> diag;
  std::vector<Real> abs_diag;
  diag.reserve(count);
  abs_diag.reserve(count);

  Real partial = 0;
  Real noise = 0;
  Real scale = 0.5;  // 2^{-(k+1)}
  Real last_magnitude = 0;

  Real best_value = 0;
  Real best_error = std::numeric_limits<Real>::infinity();
  int best_terms = 0;

  for (std::size_t k = 0; k < count; ++k) {
    const Real b = (k % 2 == 0) ? terms[k] : -terms[k];
    Real e = b;
    Real ae = abs(b);
    for (std::size_t j = 0; j < k; ++j) {
      const Real next = e - diag[j];
      const Real next_abs = ae + abs_diag[j];
      diag[j] = e;
      abs_diag[j] = ae;
      e = next;
      ae = next_abs;
    }
    diag.push_back(e);
    abs_diag.push_back(ae);

    const Real transformed = ((k % 2 == 0) ? e : -e) * scale;
    const Real term_noise = kUnit * static_cast<Real>(k + 1) * ae * scale;

    if (k > 0) {
      const Real candidate = abs(transformed) + noise;
      if (candidate < best_error) {
        best_error = candidate;
        best_value = partial;
        best_terms = static_cast<int>(k);
      }
    }
    partial += transformed;
    noise += term_noise;
    last_magnitude = abs(transformed);
    scale *= 0.5;
  }

  const Real all_terms_error = last_magnitude + noise;
  if (all_terms_error <= best_error) {
    best_error = all_terms_error;
    best_value = partial;
    best_terms = static_cast<int>(count);
  }
  report.value = static_cast<double>(best_value);
  // The final rounding to double is part of the error.
  report.error_estimate = static_cast<double>(best_error) + kEps * std::abs(report.value);
  report.terms_used = best_terms;
  return report;
}

ConvergenceReport cvz_sum(std::span<const double> terms) {
  // Nonzero terms must carry the sign of terms[first nonzero] times (-1)^k.
  int reference = 0;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const double t = terms[k];
    if (t == 0.0) continue;
    const int parity_sign = (k % 2 == 0) ? 1 : -1;
    const int s = (t > 0.0 ? 1 : -1) * parity_sign;
    if (reference == 0) {
      reference = s;
    } else if (s != reference) {
      throw SignPatternError("Chebyshev acceleration needs alternating signs; term " +
                             std::to_string(k) + " breaks the pattern");
    }
  }

  ConvergenceReport report;
  report.method = AccelerationMethod::ChebyshevAlternating;
  const int n = static_cast<int>(terms.size());
  const double nd = static_cast<double>(n);

  // Algorithm 1 with every quantity divided by d = ((3+sqrt8)^n + (3+sqrt8)^-n) / 2,
  // so nothing overflows for long lists.
  const double d_inv = std::exp(-nd * std::log(kCvzBase));
  double b = -2.0 * d_inv / (1.0 + d_inv * d_inv);
  double c = -1.0;
  double sum = 0.0;
  double abs_sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double a = (k % 2 == 0) ? terms[static_cast<std::size_t>(k)]
                                  : -terms[static_cast<std::size_t>(k)];
    c = b - c;
    sum += c * a;
    abs_sum += std::abs(c * a);
    const double kd = static_cast<double>(k);
    b = b * (kd + nd) * (kd - nd) / ((kd + 0.5) * (kd + 1.0));
  }
  report.value = sum;
  report.terms_used = n;
  report.error_estimate = 2.0 * std::abs(terms.front()) * d_inv + 2.0 * kEps * abs_sum;
  return report;
}

}  // namespace

std::string_view method_tag(AccelerationMethod method) {
  switch (method) {
    case AccelerationMethod::NoAcceleration:
      return "none";
    case AccelerationMethod::EulerTransform:
      return "euler";
    case AccelerationMethod::ChebyshevAlternating:
      return "cvz";
  }
  return "none";
}

AccelerationMethod parse_method(std::string_view tag) {
  if (tag == "none") return AccelerationMethod::NoAcceleration;
  if (tag == "euler") return AccelerationMethod::EulerTransform;
  if (tag == "cvz") return AccelerationMethod::ChebyshevAlternating;
  throw DomainError("unknown acceleration method '" + std::string(tag) + "'");
}

ConvergenceReport sum_alternating(std::span<const double> terms, AccelerationMethod method) {
  if (terms.empty()) throw DomainError("sum_alternating needs at least one term");
  switch (method) {
    case AccelerationMethod::NoAcceleration:
      return plain_sum(terms);
    case AccelerationMethod::EulerTransform:
      return euler_sum<double>(terms);
    case AccelerationMethod::ChebyshevAlternating:
      return cvz_sum(terms);
  }
  return plain_sum(terms);
}

ConvergenceReport sum_alternating(std::span<const ComplexValue> terms, AccelerationMethod method) {
  if (terms.empty()) throw DomainError("sum_alternating needs at least one term");
  std::vector<double> re(terms.size());
  std::vector<double> im(terms.size());
  bool has_imag = false;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    re[k] = terms[k].real();
    im[k] = terms[k].imag();
    has_imag = has_imag || im[k] != 0.0;
  }
  ConvergenceReport report = sum_alternating(std::span<const double>(re), method);
  if (has_imag) {
    const ConvergenceReport imag = sum_alternating(std::span<const double>(im), method);
    report.value_im = imag.value;
    report.error_estimate = std::hypot(report.error_estimate, imag.error_estimate);
    report.terms_used = std::max(report.terms_used, imag.terms_used);
  }
  return report;
}

ConvergenceReport euler_transform_extended(std::span<const ExtendedReal> terms) {
  if (terms.empty()) throw DomainError("euler_transform_extended needs at least one term");
  return euler_sum<ExtendedReal>(terms);
}

bool terms_decay(std::span<const double> magnitudes) {
  const std::size_t n = magnitudes.size();
  if (n < 8) return true;
  double third = 0.0;
  double fourth = 0.0;
  for (std::size_t k = n / 2; k < 3 * n / 4; ++k) third += std::abs(magnitudes[k]);
  for (std::size_t k = 3 * n / 4; k < n; ++k) fourth += std::abs(magnitudes[k]);
  third /= static_cast<double>(3 * n / 4 - n / 2);
  fourth /= static_cast<double>(n - 3 * n / 4);
  if (fourth == 0.0) return true;
  return fourth < 0.98 * third;
}

}  // namespace omega_zeta
