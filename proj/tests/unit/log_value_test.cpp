#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "smoothbound/log_value.hpp"

namespace sb = smoothbound;

namespace {

TEST(LogValue, ZeroAndOne) {
  EXPECT_TRUE(sb::LogValue::zero().is_zero());
  EXPECT_EQ(sb::LogValue::one().log(), 0.0);
  EXPECT_EQ((sb::LogValue::zero() + sb::LogValue::one()).log(), 0.0);
  EXPECT_TRUE((sb::LogValue::zero() * sb::LogValue::from_log(5.0)).is_zero());
  EXPECT_TRUE(sb::LogValue::from_linear(0.0).is_zero());
}

TEST(LogValue, SumMatchesLinear) {
  const auto a = sb::LogValue::from_linear(3.0), b = sb::LogValue::from_linear(4.5);
  EXPECT_NEAR((a + b).linear(), 7.5, 1e-14);
  EXPECT_NEAR((a * b).linear(), 13.5, 1e-13);
  EXPECT_NEAR((b / a).linear(), 1.5, 1e-15);
}

TEST(LogValue, HugeLogsDoNotOverflow) {
  const auto a = sb::LogValue::from_log(1e6), b = sb::LogValue::from_log(1e6);
  EXPECT_NEAR((a + b).log(), 1e6 + std::log(2.0), 1e-9);
  EXPECT_NEAR((a + sb::LogValue::from_log(-1e6)).log(), 1e6, 1e-9);
}

TEST(LogValue, SumAssociativeAndCommutative) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(-700.0, 700.0);
  for (int i = 0; i < 1000; ++i) {
    const auto a = sb::LogValue::from_log(d(rng)), b = sb::LogValue::from_log(d(rng)),
               c = sb::LogValue::from_log(d(rng));
    const double l = ((a + b) + c).log(), r = (a + (b + c)).log();
    ASSERT_NEAR(l, r, 1e-12 * std::max(1.0, std::abs(l)));
    ASSERT_EQ((a + b).log(), (b + a).log());
  }
}

TEST(LogSum, MatchesPairwiseSum) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(-50.0, 900.0);
  sb::LogSum s;
  sb::LogValue pairwise;
  for (int i = 0; i < 500; ++i) {
    const auto v = sb::LogValue::from_log(d(rng));
    s.add(v);
    pairwise += v;
  }
  EXPECT_NEAR(s.value().log(), pairwise.log(), 1e-10);
  EXPECT_TRUE(sb::LogSum().value().is_zero());
}

TEST(LogValue, Ordering) {
  EXPECT_LT(sb::LogValue::from_log(1.0), sb::LogValue::from_log(2.0));
  EXPECT_LT(sb::LogValue::zero(), sb::LogValue::from_log(-1e300));
}

}  // namespace
