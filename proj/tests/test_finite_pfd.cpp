#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "omega_zeta/errors.hpp"
#include "omega_zeta/finite_pfd.hpp"

namespace omega_zeta {
namespace {

TEST(FinitePfd, TwoNodes) {
  const ComplexValue nodes[] = {1.0, 2.0};
  const PfdResult r = pfd_coefficients(nodes);
  EXPECT_NEAR(std::abs(r.coefficients[0] - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(r.coefficients[1] + 1.0), 0.0, 1e-15);
}

TEST(FinitePfd, ThreeNodesWithZero) {
  const ComplexValue nodes[] = {0.0, 1.0, 3.0};
  const PfdResult r = pfd_coefficients(nodes);
  EXPECT_NEAR(r.coefficients[0].real(), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(r.coefficients[1].real(), -0.5, 1e-15);
  EXPECT_NEAR(r.coefficients[2].real(), 1.0 / 6.0, 1e-15);
  EXPECT_LT(pfd_residual(r, 1.0), 1e-15);
}

TEST(FinitePfd, SingleNode) {
  const ComplexValue nodes[] = {{2.0, 1.0}};
  const PfdResult r = pfd_coefficients(nodes);
  EXPECT_EQ(r.coefficients[0], ComplexValue(1.0, 0.0));
  EXPECT_EQ(r.condition_number, 1.0);
}

TEST(FinitePfd, CoefficientsSumToZero) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<ComplexValue> nodes;
    for (int i = 0; i < 6; ++i) nodes.emplace_back(u(rng) + 11.0 * i, u(rng));
    const PfdResult r = pfd_coefficients(nodes);
    ComplexValue sum = 0.0;
    double largest = 0.0;
    for (const ComplexValue& mu : r.coefficients) {
      sum += mu;
      largest = std::max(largest, std::abs(mu));
    }
    EXPECT_LT(std::abs(sum), 1e-12 * largest);
    EXPECT_LT(pfd_residual(r, {0.5, 0.5}), 1e-12);
  }
}

TEST(FinitePfd, Errors) {
  EXPECT_THROW(pfd_coefficients(std::span<const ComplexValue>()), DomainError);
  const ComplexValue close[] = {1.0, 1.0 + 1e-12};
  EXPECT_THROW(pfd_coefficients(close), DegenerateNodesError);
  const ComplexValue nodes[] = {1.0, 2.0};
  const PfdResult r = pfd_coefficients(nodes);
  EXPECT_THROW(pfd_residual(r, -1.0), PoleError);
}

}  // namespace
}  // namespace omega_zeta
