#include <cmath>

#include <gtest/gtest.h>

#include "omega_zeta/errors.hpp"
#include "omega_zeta/zeta_series.hpp"
#include "reference_values.hpp"

namespace omega_zeta {
namespace {

namespace ref = reference;

PrecisionConfig config(int terms, AccelerationMethod method) {
  PrecisionConfig c;
  c.max_terms = terms;
  c.method = method;
  return c;
}

TEST(ZetaTerm, MatchesReference) {
  for (const auto& r : ref::kZetaTerms) {
    const SeriesTermTrace t = zeta_term(r.m, r.n);
    EXPECT_NEAR(t.log_mag, r.log_mag, 1e-12 * std::max(1.0, std::abs(r.log_mag)))
        << r.m << " " << r.n;
    EXPECT_EQ(t.sign, r.n % 2 == 1 ? 1 : -1);
    if (r.value != 0.0) {
      EXPECT_NEAR(t.value / r.value, 1.0, 1e-11) << r.m << " " << r.n;
    }
  }
}

TEST(ZetaTerm, SecondOrderCollapse) {
  for (long n = 1; n <= 100; ++n) {
    const double want = (n % 2 == 1 ? 2.0 : -2.0) / static_cast<double>(n * n);
    EXPECT_NEAR(zeta_term(2, n).value / want, 1.0, 1e-14);
  }
}

TEST(ZetaTerm, ParallelTermsAreIdentical) {
  const std::vector<SeriesTermTrace> one = zeta_terms(5, 64, 1);
  const std::vector<SeriesTermTrace> four = zeta_terms(5, 64, 4);
  ASSERT_EQ(one.size(), four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].n, static_cast<long>(i + 1));
    EXPECT_EQ(one[i].value, four[i].value);
    EXPECT_EQ(one[i].log_mag, four[i].log_mag);
  }
}

TEST(ZetaSeries, ReproducesZeta2And3) {
  const ConvergenceReport two = zeta_via_series(2, config(32, AccelerationMethod::ChebyshevAlternating));
  EXPECT_NEAR(two.value, kPi * kPi / 6.0, 1e-12);
  const ConvergenceReport three = zeta_via_series(3, config(64, AccelerationMethod::ChebyshevAlternating));
  EXPECT_NEAR(three.value, ref::kZeta3, 1e-9);
  EXPECT_EQ(three.regime, "convergent");
  const ConvergenceReport five = zeta_via_series(5, config(64, AccelerationMethod::ChebyshevAlternating));
  EXPECT_NEAR(five.value, ref::kZeta5, 1e-8);
}

// The terms decay geometrically, so a plain sum is already accurate.
TEST(ZetaSeries, PlainSumConverges) {
  const ConvergenceReport r = zeta_via_series(3, config(20, AccelerationMethod::NoAcceleration));
  EXPECT_NEAR(r.value, ref::kZeta3, 1e-15);
  EXPECT_LT(r.error_estimate, 1e-17);
}

TEST(ZetaSeries, TraceOnRequest) {
  PrecisionConfig c = config(10, AccelerationMethod::EulerTransform);
  EXPECT_TRUE(zeta_via_series(4, c).trace.empty());
  c.trace_enabled = true;
  const ConvergenceReport r = zeta_via_series(4, c);
  // Euler truncation may stop early; the trace covers the terms it used.
  ASSERT_EQ(r.trace.size(), static_cast<std::size_t>(r.terms_used));
  EXPECT_EQ(r.trace[3].n, 4);
}

TEST(ZetaSeries, Errors) {
  EXPECT_THROW(zeta_via_series(1, config(10, AccelerationMethod::ChebyshevAlternating)), DomainError);
  EXPECT_THROW(zeta_via_series(3, config(0, AccelerationMethod::ChebyshevAlternating)), DomainError);
}

}  // namespace
}  // namespace omega_zeta
