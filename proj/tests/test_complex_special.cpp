#include <cmath>

#include <gtest/gtest.h>

#include "omega_zeta/complex_special.hpp"
#include "omega_zeta/errors.hpp"
#include "reference_values.hpp"

namespace omega_zeta {
namespace {

namespace ref = reference;

double rel(ComplexValue got, ComplexValue want) { return std::abs(got - want) / std::abs(want); }

TEST(LogGamma, IntegerValuesAreLogFactorials) {
  double log_factorial = 0.0;
  for (int n = 1; n <= 30; ++n) {
    EXPECT_NEAR(log_gamma(static_cast<double>(n)).log_mag(), log_factorial,
                1e-14 * std::max(1.0, log_factorial));
    log_factorial += std::log(static_cast<double>(n));
  }
}

TEST(LogGamma, MatchesReferenceOffAxis) {
  EXPECT_NEAR(log_gamma(ComplexValue(1.0, 3.0)).log_mag(), ref::kLogAbsGamma1Plus3I, 1e-13);
  EXPECT_NEAR(log_gamma(ComplexValue(50.0, 40.0)).log_mag(), ref::kLogAbsGamma50Plus40I, 1e-12);
}

TEST(LogGamma, ArgumentStaysPrincipal) {
  for (double y : {0.5, 3.0, 40.0, 400.0}) {
    const double arg = log_gamma(ComplexValue(2.0, y)).arg();
    EXPECT_GT(arg, -kPi);
    EXPECT_LE(arg, kPi);
  }
}

TEST(Gamma, MatchesReference) {
  EXPECT_LT(rel(gamma(ComplexValue(1.0, 1.0)), {ref::kGamma1PlusI_re, ref::kGamma1PlusI_im}),
            1e-14);
  EXPECT_LT(rel(gamma(ComplexValue(-2.5, 0.75)), {ref::kGammaM25_075_re, ref::kGammaM25_075_im}),
            1e-13);
  EXPECT_NEAR(gamma(ComplexValue(0.5, 0.0)).real(), std::sqrt(kPi), 1e-15);
}

TEST(Gamma, ReflectionHoldsOnTheStrip) {
  for (double y : {0.1, 0.7, 2.0}) {
    const ComplexValue z(0.3, y);
    const ComplexValue lhs = gamma(z) * gamma(1.0 - z);
    const ComplexValue rhs = kPi / std::sin(kPi * z);
    EXPECT_LT(rel(lhs, rhs), 1e-13);
  }
}

TEST(Gamma, PolesAndOverflowAreReported) {
  EXPECT_THROW(log_gamma(ComplexValue(0.0, 0.0)), PoleError);
  EXPECT_THROW(log_gamma(ComplexValue(-3.0, 0.0)), PoleError);
  EXPECT_THROW(gamma(ComplexValue(200.0, 0.0)), OverflowError);
  EXPECT_NO_THROW(log_gamma(ComplexValue(200.0, 0.0)));
}

TEST(Digamma, MatchesReference) {
  EXPECT_NEAR(digamma(ComplexValue(1.0, 0.0)).real(), -kEulerGamma, 1e-14);
  EXPECT_LT(rel(digamma(ComplexValue(1.0, 1.0)), {ref::kDigamma1PlusI_re, ref::kDigamma1PlusI_im}),
            1e-13);
}

TEST(Trigamma, KnownValues) {
  EXPECT_NEAR(trigamma(1.0), kPi * kPi / 6.0, 1e-14);
  EXPECT_NEAR(trigamma(2.0), kPi * kPi / 6.0 - 1.0, 1e-14);
  EXPECT_NEAR(trigamma(0.5), kPi * kPi / 2.0, 1e-13);
  EXPECT_NEAR(trigamma(0.1) / ref::kTrigamma0p1, 1.0, 1e-14);
  EXPECT_NEAR(trigamma(1.3), ref::kTrigamma1p3, 1e-14);
  EXPECT_NEAR(trigamma(3.5), ref::kTrigamma3p5, 1e-14);
}

TEST(Trigamma, Recurrence) {
  for (double x : {0.1, 0.5, 1.0, 2.0, 10.0}) {
    const double lhs = trigamma(x) - trigamma(x + 1.0);
    EXPECT_NEAR(lhs * x * x, 1.0, 1e-12) << "x = " << x;
  }
  EXPECT_THROW(trigamma(0.0), DomainError);
  EXPECT_THROW(trigamma(-1.5), DomainError);
}

TEST(Beta, MatchesReference) {
  EXPECT_NEAR(beta(2.5, 1.5).real(), ref::kBeta2p5_1p5, 1e-15);
  EXPECT_NEAR(beta(1.0, 1.0).real(), 1.0, 1e-15);
}

TEST(LogSin, AgreesWithDirectSineWhereFinite) {
  for (const ComplexValue z : {ComplexValue(0.3, 0.2), ComplexValue(2.0, -1.5), ComplexValue(-1.1, 4.0)}) {
    EXPECT_LT(rel(log_sin(z).to_complex(), std::sin(z)), 1e-14);
    EXPECT_LT(rel(log_sin_pi(z).to_complex(), std::sin(kPi * z)), 1e-13);
  }
}

TEST(LogSin, StaysFiniteFarFromTheAxis) {
  const LogComplex big = log_sin_pi(ComplexValue(0.25, 500.0));
  EXPECT_TRUE(std::isfinite(big.log_mag()));
  EXPECT_NEAR(big.log_mag(), kPi * 500.0 - kLn2, 1e-10);
  EXPECT_THROW(log_sin_pi(ComplexValue(3.0, 0.0)), PoleError);
}

TEST(LogHyperbolic, LargeArguments) {
  EXPECT_NEAR(log_cosh(0.0), 0.0, 0.0);
  EXPECT_NEAR(log_sinh(1.0), std::log(std::sinh(1.0)), 1e-15);
  EXPECT_NEAR(log_cosh(2000.0), 2000.0 - kLn2, 1e-12);
  EXPECT_NEAR(log_sinh(2000.0), 2000.0 - kLn2, 1e-12);
}

TEST(RootsOfUnity, ExactSymmetries) {
  EXPECT_THROW(roots_of_unity(1), DomainError);
  for (int m = 2; m <= 12; ++m) {
    const UnityRoots r = roots_of_unity(m);
    ASSERT_EQ(static_cast<int>(r.roots.size()), m);
    EXPECT_EQ(r.roots[0], ComplexValue(1.0, 0.0));
    for (int j = 1; j < m; ++j) {
      EXPECT_EQ(r.roots[m - j], std::conj(r.roots[j]));
      EXPECT_NEAR(std::abs(std::pow(r.roots[j], m) - 1.0), 0.0, 1e-13);
    }
    if (m % 2 == 0) {
      EXPECT_EQ(r.roots[m / 2], ComplexValue(-1.0, 0.0));
    }
    if (m % 4 == 0) {
      EXPECT_EQ(r.roots[m / 4], ComplexValue(0.0, 1.0));
    }
  }
}

TEST(LogComplex, ArgumentIsWrapped) {
  const LogComplex a(0.0, 3.0);
  const LogComplex b = a * a;
  EXPECT_GT(b.arg(), -kPi);
  EXPECT_LE(b.arg(), kPi);
  EXPECT_LT(std::abs(b.to_complex() - std::polar(1.0, 6.0)), 1e-15);
}

}  // namespace
}  // namespace omega_zeta
