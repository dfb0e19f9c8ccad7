#include <cmath>

#include <gtest/gtest.h>

#include "omega_zeta/errors.hpp"
#include "omega_zeta/zeta3_variants.hpp"
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

TEST(Zeta3, VariantTags) {
  for (Zeta3Variant v : {Zeta3Variant::SineForm, Zeta3Variant::HyperbolicForm, Zeta3Variant::BetaForm}) {
    EXPECT_EQ(parse_variant(variant_tag(v)), v);
  }
  EXPECT_THROW(parse_variant("apery"), DomainError);
}

TEST(Zeta3, PolynomialFactorsMatchReference) {
  EXPECT_NEAR(p_poly(3), ref::kLogP3, 1e-13);
  EXPECT_NEAR(q_poly(3), ref::kLogQ3, 1e-13);
  EXPECT_NEAR(p_poly(50), ref::kLogP50, 1e-11);
  EXPECT_NEAR(q_poly(50), ref::kLogQ50, 1e-11);
  EXPECT_THROW(p_poly(0), DomainError);
}

TEST(Zeta3, SineAndHyperbolicTermsEqualSeriesTerms) {
  for (long n = 1; n <= 20; ++n) {
    const SeriesTermTrace want = zeta_term(3, n);
    const SeriesTermTrace sine = sine_form_term(n);
    const SeriesTermTrace hyp = hyperbolic_term(n);
    EXPECT_EQ(sine.sign, want.sign);
    EXPECT_EQ(hyp.sign, want.sign);
    EXPECT_NEAR(sine.value, want.value, 1e-12 * std::abs(want.value)) << n;
    EXPECT_NEAR(hyp.value, want.value, 1e-12 * std::abs(want.value)) << n;
  }
}

TEST(Zeta3, HyperbolicConvergesInTwelveTerms) {
  const ConvergenceReport r =
      zeta3_series(Zeta3Variant::HyperbolicForm, config(12, AccelerationMethod::NoAcceleration));
  EXPECT_LT(std::abs(r.value - ref::kZeta3), 1e-9);
}

TEST(Zeta3, SineFormSum) {
  const ConvergenceReport r =
      zeta3_series(Zeta3Variant::SineForm, config(40, AccelerationMethod::NoAcceleration));
  EXPECT_LT(std::abs(r.value - ref::kZeta3), 1e-6);
}

TEST(Zeta3, TermsStayFiniteToTwoHundred) {
  for (long n = 1; n <= 200; ++n) {
    EXPECT_TRUE(std::isfinite(sine_form_term(n).log_mag)) << n;
    EXPECT_TRUE(std::isfinite(hyperbolic_term(n).log_mag)) << n;
    EXPECT_TRUE(std::isfinite(beta_first_term(n).log_mag)) << n;
  }
}

TEST(Zeta3, BetaInnerSumsMatchIntegralRepresentation) {
  for (const auto& r : ref::kBetaInner) {
    const ConvergenceReport s = beta_inner_sum(r.n, 96, AccelerationMethod::EulerTransform);
    EXPECT_NEAR(s.value / r.value, 1.0, 1e-10) << r.n;
  }
}

TEST(Zeta3, BetaInnerSumNeedsEulerForLargeN) {
  EXPECT_NO_THROW(beta_inner_sum(3, 400, AccelerationMethod::NoAcceleration));
  EXPECT_THROW(beta_inner_sum(4, 96, AccelerationMethod::NoAcceleration), DivergenceError);
  EXPECT_THROW(beta_inner_sum(10, 96, AccelerationMethod::ChebyshevAlternating), DivergenceError);
}

TEST(Zeta3, BetaOuterTermsMatchSeriesTermsForSmallN) {
  for (long n = 1; n <= 3; ++n) {
    const BetaOuterTerm t = beta_outer_term(n, 96, AccelerationMethod::EulerTransform);
    EXPECT_NEAR(t.value, zeta_term(3, n).value, 1e-9) << n;
  }
}

TEST(Zeta3, BetaFormSum) {
  PrecisionConfig c = config(40, AccelerationMethod::ChebyshevAlternating);
  const ConvergenceReport r = zeta3_series(Zeta3Variant::BetaForm, c);
  EXPECT_LT(std::abs(r.value - ref::kZeta3), 1e-5);
  EXPECT_EQ(r.regime, "regularized");
  c.inner_method = AccelerationMethod::NoAcceleration;
  EXPECT_THROW(zeta3_series(Zeta3Variant::BetaForm, c), DivergenceError);
}

TEST(Zeta3, ThreadCountDoesNotChangeTheValue) {
  PrecisionConfig c = config(30, AccelerationMethod::ChebyshevAlternating);
  const double one = zeta3_series(Zeta3Variant::BetaForm, c).value;
  c.threads = 3;
  EXPECT_EQ(zeta3_series(Zeta3Variant::BetaForm, c).value, one);
}

}  // namespace
}  // namespace omega_zeta
