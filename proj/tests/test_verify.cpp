#include <cmath>

#include <gtest/gtest.h>

#include "omega_zeta/errors.hpp"
#include "omega_zeta/verify.hpp"

namespace omega_zeta {
namespace {

TEST(Verify, EverySuitePasses) {
  for (const std::string& suite : suite_names()) {
    const std::vector<CheckResult> results = run_verify(suite, std::nullopt);
    ASSERT_FALSE(results.empty()) << suite;
    for (const CheckResult& c : results) {
      EXPECT_EQ(c.suite, suite);
      EXPECT_TRUE(c.passed) << c.suite << "/" << c.name << " measured " << c.measured
                            << " threshold " << c.threshold << " " << c.detail;
    }
  }
}

TEST(Verify, ToleranceOnlyRelaxes) {
  const std::vector<CheckResult> strict = run_verify("zeta", std::nullopt);
  const std::vector<CheckResult> loose = run_verify("zeta", 1e-8);
  ASSERT_EQ(strict.size(), loose.size());
  for (std::size_t i = 0; i < strict.size(); ++i) {
    if (std::isnan(strict[i].threshold)) continue;
    EXPECT_EQ(loose[i].threshold, std::max(strict[i].threshold, 1e-8));
  }
  const std::vector<CheckResult> tight = run_verify("zeta", 1e-30);
  for (std::size_t i = 0; i < strict.size(); ++i) {
    if (std::isnan(strict[i].threshold)) continue;
    EXPECT_EQ(tight[i].threshold, strict[i].threshold);
  }
}

TEST(Verify, AllIsTheUnionOfSuites) {
  std::size_t total = 0;
  for (const std::string& suite : suite_names()) total += run_verify(suite, std::nullopt).size();
  EXPECT_EQ(run_verify("all", std::nullopt).size(), total);
  EXPECT_THROW(run_verify("nonsense", std::nullopt), DomainError);
}

}  // namespace
}  // namespace omega_zeta
