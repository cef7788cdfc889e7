#include <gtest/gtest.h>

#include <algorithm>

#include "qpart/qseries.hpp"
#include "qpart/statistics.hpp"
#include "qpart/verify.hpp"

using namespace qpart;

namespace {

class Suite : public ::testing::TestWithParam<std::string_view> {};

TEST_P(Suite, PassesAtSmallSize) {
  VerifyOptions o;
  o.n_max = 6;
  const auto report = run_suite(GetParam(), o);
  EXPECT_TRUE(report.passed()) << to_text(report);
  EXPECT_GT(report.cases, 0u);
  EXPECT_EQ(report.failures.size(), 0u);
}

// Reports must not depend on how the range is split across workers.
TEST_P(Suite, ThreadCountDoesNotChangeTheReport) {
  VerifyOptions one;
  one.n_max = 6;
  VerifyOptions many = one;
  many.threads = 3;
  EXPECT_EQ(to_json(run_suite(GetParam(), one), false), to_json(run_suite(GetParam(), many), false));
}

INSTANTIATE_TEST_SUITE_P(All, Suite, ::testing::ValuesIn(suite_names().begin(), suite_names().end()),
                         [](const auto& info) {
                           std::string s(info.param);
                           std::replace(s.begin(), s.end(), '-', '_');
                           return s;
                         });

TEST(Verify, PerKBreakdownSumsToBell) {
  VerifyOptions o;
  o.n_max = 7;
  const auto report = run_suite("theorem2", o);
  std::uint64_t at7 = 0;
  for (const auto& c : report.breakdown) {
    if (c.n == 7) at7 += c.cases;
  }
  EXPECT_EQ(at7, 877u);
  EXPECT_NE(to_text(report).find("n=7: 877"), std::string::npos);
}

TEST(Verify, UnknownSuite) {
  EXPECT_FALSE(is_suite("nope"));
  EXPECT_THROW(run_suite("nope", {}), std::invalid_argument);
  EXPECT_EQ(run_suites("all", VerifyOptions{2, 1, 10}).size(), suite_names().size());
}

TEST(Verify, SweepGeneratingFunctionIsThreadIndependent) {
  const auto stat = parse_statistic("mak");
  for (int k = 1; k <= 8; ++k) {
    const auto one = sweep_generating_function(8, k, stat, false, 1);
    EXPECT_EQ(one, q_stirling(8, k));
    EXPECT_EQ(sweep_generating_function(8, k, stat, false, 4), one);
  }
  const auto ordered = sweep_generating_function(5, 3, parse_statistic("lmak+binv"), true, 2);
  EXPECT_EQ(ordered, q_factorial(3) * q_stirling(5, 3));
}

}  // namespace
