#include <cmath>
#include <cstring>

#include <gtest/gtest.h>

#include "omega_zeta/errors.hpp"
#include "omega_zeta/gamma_pfd.hpp"
#include "reference_values.hpp"

namespace omega_zeta {
namespace {

namespace ref = reference;

double rel(ComplexValue got, ComplexValue want) { return std::abs(got - want) / std::abs(want); }

TEST(GammaPair, MatchesReference) {
  EXPECT_LT(rel(gamma_pair(3.0, 0.4), {ref::kGammaPair3_0p4_re, ref::kGammaPair3_0p4_im}), 1e-14);
  EXPECT_LT(rel(gamma_pair(1.25, {0.3, 0.2}), {ref::kGammaPair1p25_c_re, ref::kGammaPair1p25_c_im}),
            1e-14);
  EXPECT_LT(rel(gamma_pair(0.5, {0.1, 0.35}), {ref::kGammaPair0p5_c_re, ref::kGammaPair0p5_c_im}),
            1e-14);
}

TEST(GammaPfd, RegularizedRegime) {
  const ComplexValue z(0.4, 0.0);
  for (double a : {1.5, 2.0, 3.0}) {
    const ConvergenceReport r = gamma_pfd_series(a, z, 64, std::nullopt);
    EXPECT_EQ(r.method, AccelerationMethod::EulerTransform);
    EXPECT_LT(rel(r.complex_value(), gamma_pair(a, z)), 1e-6) << a;
  }
  // Raw terms scale like k^(2a-4): conditionally convergent at a = 1.5.
  EXPECT_EQ(gamma_pfd_series(1.5, z, 64, std::nullopt).regime, "convergent");
  EXPECT_EQ(gamma_pfd_series(2.0, z, 64, std::nullopt).regime, "regularized");
  const ConvergenceReport three = gamma_pfd_series(3.0, z, 64, std::nullopt);
  EXPECT_LT(rel(three.complex_value(), {ref::kGammaPair3_0p4_re, 0.0}), 1e-9);
}

TEST(GammaPfd, RawRegimeWithinEstimate) {
  const ComplexValue z(0.3, 0.2);
  for (double a : {0.5, 0.8, 1.0, 1.25}) {
    const ConvergenceReport r = gamma_pfd_series(a, z, 2000, AccelerationMethod::NoAcceleration);
    EXPECT_EQ(r.regime, "convergent") << a;
    EXPECT_LE(std::abs(r.complex_value() - gamma_pair(a, z)), 5.0 * r.error_estimate) << a;
  }
}

TEST(GammaPfd, DivergenceIsDetected) {
  EXPECT_THROW(gamma_pfd_series(3.0, 0.4, 64, AccelerationMethod::NoAcceleration), DivergenceError);
  EXPECT_THROW(gamma_pfd_series(2.5, {0.1, 0.2}, 64, AccelerationMethod::NoAcceleration),
               DivergenceError);
}

TEST(GammaPfd, EvenInZ) {
  const ComplexValue z(0.37, -0.21);
  const ConvergenceReport p = gamma_pfd_series(1.7, z, 64, std::nullopt);
  const ConvergenceReport m = gamma_pfd_series(1.7, -z, 64, std::nullopt);
  EXPECT_EQ(std::memcmp(&p.value, &m.value, sizeof(double)), 0);
  EXPECT_EQ(std::memcmp(&p.value_im, &m.value_im, sizeof(double)), 0);
}

TEST(GammaPfd, Errors) {
  EXPECT_THROW(gamma_pfd_series(-1.0, 0.4, 64, std::nullopt), DomainError);
  EXPECT_THROW(gamma_pfd_series(1.0, 2.0, 64, std::nullopt), PoleError);
}

TEST(InverseSquare, MatchesTrigamma) {
  EXPECT_NEAR(inverse_square_series(0.5, 64, AccelerationMethod::EulerTransform).value,
              kPi * kPi / 2.0 - 4.0, 1e-7);
  EXPECT_NEAR(inverse_square_series(2.5, 64, AccelerationMethod::EulerTransform).value,
              ref::kTrigamma3p5, 1e-6);
  EXPECT_NEAR(inverse_square_series(1.0, 64, std::nullopt).value, kPi * kPi / 6.0 - 1.0, 1e-6);
  EXPECT_NEAR(inverse_square_series(0.0, 1000, AccelerationMethod::NoAcceleration).value,
              kPi * kPi / 6.0, 1e-5);
}

TEST(InverseSquare, GrowingTermsNeedEuler) {
  EXPECT_THROW(inverse_square_series(0.5, 64, AccelerationMethod::NoAcceleration), DivergenceError);
  EXPECT_THROW(inverse_square_series(2.5, 64, AccelerationMethod::ChebyshevAlternating),
               DivergenceError);
  EXPECT_THROW(inverse_square_series(-1.0, 64, std::nullopt), DomainError);
}

TEST(ModulusProduct, MatchesGammaRatio) {
  for (double a : {0.5, 1.0, 2.5}) {
    const double ga2 = std::norm(gamma(ComplexValue(a, 0.0)));
    const ComplexValue z = std::polar(0.9 * a, 0.7);
    EXPECT_LT(rel(modulus_product(a, z, 1000), gamma_pair(a, z) / ga2), 1e-8) << a;
  }
  EXPECT_THROW(modulus_product(0.0, 0.1, 100), DomainError);
}

TEST(SummationIdentity, BothSidesReachTrigamma) {
  const IdentityLimits s = summation_identity_limits(shifted_sequence(1.3), 10000, 64);
  EXPECT_NEAR(s.lhs.real(), ref::kTrigamma1p3, 1e-6);
  EXPECT_NEAR(s.rhs.value, ref::kTrigamma1p3, 1e-6);
  const IdentitySides finite = summation_identity_check(integer_sequence(), 50);
  EXPECT_GT(finite.lhs.real(), 1.6);
  EXPECT_THROW(shifted_sequence(0.0), DomainError);
}

}  // namespace
}  // namespace omega_zeta
