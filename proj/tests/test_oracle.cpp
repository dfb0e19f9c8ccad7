#include <cmath>

#include <gtest/gtest.h>

#include "omega_zeta/errors.hpp"
#include "omega_zeta/oracle.hpp"
#include "reference_values.hpp"

namespace omega_zeta {
namespace {

namespace ref = reference;

TEST(Oracle, EvenArgumentsMatchClosedForms) {
  const double pi2 = kPi * kPi;
  EXPECT_NEAR(zeta_oracle(2), pi2 / 6.0, 1e-15);
  EXPECT_NEAR(zeta_oracle(4), pi2 * pi2 / 90.0, 1e-15);
  EXPECT_NEAR(zeta_oracle(6), pi2 * pi2 * pi2 / 945.0, 1e-15);
  EXPECT_NEAR(zeta_oracle(8), pi2 * pi2 * pi2 * pi2 / 9450.0, 1e-15);
}

TEST(Oracle, OddArgumentsMatchReference) {
  EXPECT_NEAR(zeta_oracle(3), ref::kZeta3, 1e-15);
  EXPECT_NEAR(zeta_oracle(5), ref::kZeta5, 1e-15);
  EXPECT_NEAR(zeta_oracle(7), ref::kZeta7, 1e-15);
  EXPECT_NEAR(zeta_oracle(9), ref::kZeta9, 1e-15);
}

TEST(Oracle, DecreasesTowardsOne) {
  for (int s = 2; s < 40; ++s) EXPECT_GT(zeta_oracle(s), zeta_oracle(s + 1));
  EXPECT_NEAR(zeta_oracle(60), 1.0, 1e-17);
  EXPECT_THROW(zeta_oracle(1), DomainError);
}

TEST(Oracle, EulerMaclaurinBound) {
  const EulerMaclaurinResult r = zeta_euler_maclaurin(3, 10, 4);
  EXPECT_LE(std::abs(r.value - ref::kZeta3), r.remainder_bound + 1e-16);
  EXPECT_LT(r.remainder_bound, 1e-10);
  EXPECT_THROW(zeta_euler_maclaurin(3, 10, 7), DomainError);
}

TEST(Oracle, Tails) {
  EXPECT_NEAR(dirichlet_tail(3, 100) / ref::kDirichletTail3_100, 1.0, 1e-13);
  EXPECT_NEAR(power_tail(4, 0.7), ref::kPowerTail4_0p7, 1e-13);
  EXPECT_NEAR(power_tail(2, 1.0), kPi * kPi / 6.0, 1e-14);
}

TEST(Oracle, KnownConstants) {
  EXPECT_NEAR(known_constant("zeta3"), ref::kZeta3, 1e-16);
  EXPECT_EQ(known_constant("pi"), kPi);
  EXPECT_NEAR(known_constant("zeta2"), zeta_oracle(2), 1e-15);
  EXPECT_THROW(known_constant("zeta5"), UnknownConstantError);
}

TEST(Oracle, ConfigValidation) {
  PrecisionConfig config;
  EXPECT_NO_THROW(validate(config));
  config.max_terms = 0;
  EXPECT_THROW(validate(config), DomainError);
  config.max_terms = 10;
  config.target_abs_error = 0.0;
  EXPECT_THROW(validate(config), DomainError);
}

}  // namespace
}  // namespace omega_zeta
