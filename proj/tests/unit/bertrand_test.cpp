#include <gtest/gtest.h>

#include <cmath>

#include "smoothbound/bertrand.hpp"
#include "smoothbound/errors.hpp"

namespace sb = smoothbound;

namespace {

const sb::PrimeTable& table() {
  static const sb::PrimeTable t(2100000);
  return t;
}

TEST(PrimeInInterval, Examples) {
  EXPECT_EQ(sb::prime_in_interval(table(), 10, 1.5), 11u);
  EXPECT_FALSE(sb::prime_in_interval(table(), 2, 1.4).has_value());
  EXPECT_EQ(sb::prime_in_interval(table(), 24, 1.25), 29u);
  EXPECT_EQ(sb::prime_in_interval(table(), 11, 1.2), 13u);
  EXPECT_THROW(sb::prime_in_interval(table(), 2e6, 2), sb::RangeError);
  EXPECT_THROW(sb::prime_in_interval(table(), 10, 1.0), sb::DomainError);
}

TEST(PrimeInInterval, StrictInterior) {
  for (double y = 3; y < 5000; y += 0.75) {
    const auto p = sb::prime_in_interval(table(), y, 1.3);
    if (p) {
      ASSERT_GT(double(*p), y);
      ASSERT_LT(double(*p), 1.3 * y);
    }
  }
}

TEST(Scan, ClassicalRanges) {
  EXPECT_TRUE(sb::scan(table(), 10, 1000000, 1.5).failures.empty());
  EXPECT_TRUE(sb::scan(table(), 2, 1000000, 2.0).failures.empty());
  const auto small = sb::scan(table(), 10, 100, 1.01);
  EXPECT_FALSE(small.failures.empty());
  EXPECT_EQ(small.checked, 91u);
}

TEST(Scan, AgreesWithPointQueries) {
  const auto r = sb::scan(table(), 2, 3000, 1.1);
  std::vector<std::uint64_t> expect;
  for (std::uint64_t y = 2; y <= 3000; ++y) {
    if (!sb::prime_in_interval(table(), double(y), 1.1)) expect.push_back(y);
  }
  EXPECT_EQ(r.failures, expect);
}

TEST(Scan, NeedsPrimeAboveRange) {
  const sb::PrimeTable small(100);
  EXPECT_THROW(sb::scan(small, 2, 100, 2.0), sb::RangeError);
}

TEST(Model, RoundTrip) {
  const auto q = sb::XYQuery::from_values(1e12, 1e4);
  const double a = 1.1;
  EXPECT_NEAR(sb::empirical_a_from_log(q, sb::psi_model(q, a)), a, 1e-10);
}

TEST(Model, DerivativeAboveFloor) {
  for (double ln_y : {8.0, 10.0, 12.0}) {
    for (double u : {3.0, 6.0, 12.0}) {
      const auto q = sb::XYQuery::from_logs(u * ln_y, ln_y);
      EXPECT_GE(sb::model_y_derivative(q, 1.2), sb::model_y_derivative_floor(q) * (1 - 1e-3))
          << ln_y << " " << u;
    }
  }
}

TEST(Model, RatioAboveFloor) {
  for (double ln_y : {8.0, 10.0, 12.0}) {
    for (double u : {3.0, 6.0, 12.0}) {
      const auto q = sb::XYQuery::from_logs(u * ln_y, ln_y);
      EXPECT_GT(sb::model_log_ratio(q, 1.6, 1.2), sb::model_log_ratio_floor(q, 1.6) * (1 - 1e-3));
    }
  }
}

}  // namespace
