#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "smoothbound/errors.hpp"
#include "smoothbound/simplex_bounds.hpp"
#include "smoothbound/smooth_exact.hpp"

namespace sb = smoothbound;

namespace {

const sb::PrimeTable& table() {
  static const sb::PrimeTable t(200000);
  return t;
}

TEST(RRule, Cases) {
  EXPECT_EQ(sb::classify_r(100), sb::RCase::kR1);
  EXPECT_EQ(sb::classify_r(120), sb::RCase::kR2);
  const double edge = std::exp(4.0 + std::numbers::ln2);
  EXPECT_THROW(sb::classify_r(edge), sb::DomainError);
}

TEST(BuildReduced, ExactWeightsAtHundred) {
  const auto s = sb::build_reduced(table(), 10000, 100, sb::WeightMode::kExact);
  EXPECT_EQ(s.r, 4);
  EXPECT_EQ(s.weights[0], 14.0);
  double total = 0;
  for (double m : s.weights) total += m;
  EXPECT_EQ(total, double(sb::count_primes_in(table(), s.cutoff(), 100)));
}

TEST(BuildReduced, PntWeight) {
  const auto s = sb::build_reduced(table(), 10000, 100, sb::WeightMode::kPnt);
  EXPECT_NEAR(s.weights[0], 17.53, 0.01);
}

TEST(BuildReduced, R2Flag) {
  sb::ReducedOptions opt;
  opt.use_r2 = true;
  const auto s = sb::build_reduced(table(), 10000, 120, sb::WeightMode::kExact, opt);
  EXPECT_EQ(s.r, 5);
  EXPECT_LT(s.coeff_upper.back(), 0.0);
  EXPECT_THROW(sb::psi_upper(s, sb::UpperForm::kExactK), sb::DomainError);
}

TEST(BuildReduced, IntervalCoefficientsBracketPrimeLogs) {
  for (double y : {30.0, 40.0, 60.0, 100.0, 150.0, 200.0}) {
    const auto s = sb::build_reduced(table(), 10000, y, sb::WeightMode::kExact);
    for (int i = 0; i + 1 < s.r; ++i) {
      for (auto p : table().primes()) {
        if (p <= s.interval_lo[i] || p > s.interval_hi[i]) continue;
        EXPECT_LT(s.coeff_upper[i], std::log(double(p)));
        EXPECT_LE(std::log(double(p)), s.coeff_lower[i] + 1e-12);
      }
    }
  }
}

TEST(Compositions, SmallValues) {
  EXPECT_NEAR(sb::compositions(2, 3).linear(), 6.0, 1e-12);
  EXPECT_NEAR(sb::compositions(0, 5).linear(), 1.0, 1e-15);
  EXPECT_NEAR(sb::compositions(3, 2).linear(), 4.0, 1e-12);
  EXPECT_THROW(sb::compositions(1, 0.5), sb::DomainError);
}

TEST(SignatureCount, Products) {
  const std::vector<std::uint32_t> zero{0, 0, 0}, two{2}, ones{1, 1};
  const std::vector<double> m3{3, 4, 5}, m1{3}, m2{14, 10};
  EXPECT_EQ(sb::signature_count(zero, m3).log(), 0.0);
  EXPECT_NEAR(sb::signature_count(two, m1).linear(), 6.0, 1e-12);
  EXPECT_NEAR(sb::signature_count(ones, m2).linear(), 140.0, 1e-10);
  const std::vector<double> bad{0.5, 2};
  EXPECT_THROW(sb::signature_count(ones, bad), sb::DomainError);
}

TEST(Lattice, TinyCases) {
  const std::vector<double> one{2.0};
  EXPECT_EQ(sb::enumerate_lattice(one, 7.0, nullptr), 4u);
  const std::vector<double> three{3.0, 2.5, 2.0};
  EXPECT_EQ(sb::enumerate_lattice(three, 1.0, nullptr), 1u);
}

TEST(Lattice, MatchesNestedLoops) {
  const std::vector<std::vector<double>> cases{{1.3}, {2.2, 0.7}, {3.1, 2.1, 1.1}, {0.5, 0.6, 0.9}};
  for (const auto& c : cases) {
    for (double budget : {0.3, 1.0, 4.4, 7.0, 12.5}) {
      EXPECT_EQ(sb::enumerate_lattice(c, budget, nullptr), oracle::nested_lattice_count(c, budget));
    }
  }
}

TEST(Lattice, VisitsEachPointOnce) {
  const std::vector<double> c{1.7, 1.1, 0.6};
  std::set<std::vector<std::uint32_t>> seen;
  const auto n = sb::enumerate_lattice(c, 6.0, [&](std::span<const std::uint32_t> z) {
    double used = 0;
    for (std::size_t i = 0; i < z.size(); ++i) used += c[i] * z[i];
    EXPECT_LT(used, 6.0);
    EXPECT_TRUE(seen.emplace(z.begin(), z.end()).second);
  });
  EXPECT_EQ(n, seen.size());
}

TEST(Lattice, MonotoneInBudget) {
  const std::vector<double> c{2.0, 1.3, 0.8};
  std::uint64_t prev = 0;
  for (double b = 0.1; b < 10; b += 0.37) {
    const auto n = sb::enumerate_lattice(c, b, nullptr);
    EXPECT_GE(n, prev);
    prev = n;
  }
}

TEST(Lattice, CapReportsPartialCount) {
  const std::vector<double> c{0.1, 0.1, 0.1};
  try {
    sb::enumerate_lattice(c, 10.0, nullptr, 1000);
    FAIL() << "expected ResourceError";
  } catch (const sb::ResourceError& e) {
    ASSERT_TRUE(e.partial().has_value());
    EXPECT_EQ(*e.partial(), 1000u);
  }
}

TEST(Lattice, LowerInsideUpper) {
  const auto s = sb::build_reduced(table(), 10000, 40, sb::WeightMode::kExact);
  EXPECT_LE(sb::enumerate_lattice(s, sb::SimplexSide::kLower, nullptr),
            sb::enumerate_lattice(s, sb::SimplexSide::kUpper, nullptr));
}

TEST(PsiBounds, SandwichAgainstRestrictedOracle) {
  for (std::uint64_t x : {1000ULL, 10000ULL, 50000ULL}) {
    for (double y : {20.0, 30.0, 40.0, 75.0, 150.0, 200.0}) {
      const auto s = sb::build_reduced(table(), x, y, sb::WeightMode::kExact);
      const auto exact = oracle::restricted_count(x, s.cutoff(), y);
      EXPECT_EQ(exact, sb::psi_naive_in_range(table(), x, s.cutoff(), y));
      const auto lo = sb::psi_lower_count(s), hi = sb::psi_upper_count(s);
      EXPECT_LE(lo, exact) << x << " " << y;
      EXPECT_GE(hi, exact) << x << " " << y;
      EXPECT_NEAR(sb::psi_lower(s, sb::LowerForm::kExactK).log(), std::log(double(lo)), 1e-9);
      EXPECT_NEAR(sb::psi_upper(s, sb::UpperForm::kExactK).log(), std::log(double(hi)), 1e-9);
      EXPECT_LE(sb::psi_lower(s, sb::LowerForm::kExactK).linear(),
                double(sb::psi_naive(table(), {x, y})));
    }
  }
}

TEST(PsiBounds, FormOrdering) {
  for (double y : {30.0, 100.0, 150.0}) {
    const auto s = sb::build_reduced(table(), 100000, y, sb::WeightMode::kExact);
    EXPECT_LE(sb::psi_lower(s, sb::LowerForm::kPoisson).log(),
              sb::psi_lower(s, sb::LowerForm::kExactK).log() + 1e-12);
    EXPECT_GE(sb::psi_upper(s, sb::UpperForm::kPBound).log(),
              sb::psi_upper(s, sb::UpperForm::kExactK).log() - 1e-12);
  }
}

TEST(PsiBounds, TinyBudgetGivesOne) {
  // ln 2 is below every coefficient of the y = 49 simplex.
  const auto s = sb::build_reduced(table(), 2, 49, sb::WeightMode::kExact);
  EXPECT_EQ(sb::psi_lower(s, sb::LowerForm::kPoisson).log(), 0.0);
  EXPECT_EQ(sb::psi_lower(s, sb::LowerForm::kExactK).log(), 0.0);
  EXPECT_EQ(sb::psi_upper(s, sb::UpperForm::kExactK).log(), 0.0);
  EXPECT_EQ(sb::psi_upper(s, sb::UpperForm::kPBound).log(), 0.0);
}

TEST(PsiBounds, ExactCountNeedsExactWeights) {
  const auto s = sb::build_reduced(table(), 1000, 100, sb::WeightMode::kPnt);
  EXPECT_THROW(sb::psi_lower_count(s), sb::DomainError);
}

}  // namespace
