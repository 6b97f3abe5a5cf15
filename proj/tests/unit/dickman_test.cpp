#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "smoothbound/dickman.hpp"
#include "smoothbound/errors.hpp"
#include "smoothbound/primes.hpp"
#include "smoothbound/smooth_exact.hpp"

namespace sb = smoothbound;

namespace {

const sb::RhoSolver& solver() {
  static const sb::RhoSolver s(1e-3, 100.0);
  return s;
}

TEST(Rho, UnitInterval) {
  EXPECT_EQ(solver().rho(0.0), 1.0);
  EXPECT_EQ(solver().rho(0.5), 1.0);
  EXPECT_EQ(solver().rho(1.0), 1.0);
  EXPECT_EQ(solver().ln_rho(0.7), 0.0);
}

TEST(Rho, ClosedFormOnOneTwo) {
  EXPECT_NEAR(solver().rho(2.0), 1.0 - std::numbers::ln2, 1e-12);
  EXPECT_NEAR(solver().rho(1.5), 1.0 - std::log(1.5), 1e-12);
  EXPECT_NEAR(solver().ln_rho(2.0), std::log(1.0 - std::numbers::ln2), 1e-12);
}

TEST(Rho, MatchesQuadratureOracleOnTwoThree) {
  for (double u : {2.25, 2.5, 2.75, 3.0}) {
    EXPECT_NEAR(solver().rho(u), oracle::rho_on_two_three(u), 1e-7) << u;
  }
  EXPECT_NEAR(oracle::rho_on_two_three(3.0), 0.0486084, 1e-7);
}

TEST(Rho, KnownValue) {
  // rho(10) = 2.770171837...e-11.
  EXPECT_NEAR(solver().rho(10.0) / 2.7701718377e-11, 1.0, 1e-5);
}

TEST(Rho, SecondOrderConvergence) {
  const sb::RhoSolver coarse(1.0 / 100, 12.0), mid(1.0 / 200, 12.0), fine(1.0 / 400, 12.0);
  for (double u : {3.0, 5.0, 10.0}) {
    const double e1 = std::abs(coarse.ln_rho(u) - fine.ln_rho(u));
    const double e2 = std::abs(mid.ln_rho(u) - fine.ln_rho(u));
    EXPECT_GE(std::log2(e1 / e2 - 1.0), 1.8) << u;
  }
}

TEST(Rho, DecreasingAndPositive) {
  double prev = 1.0;
  for (double u = 1.05; u <= 100.0; u += 0.05) {
    const double v = solver().ln_rho(u);
    ASSERT_LT(v, prev) << u;
    ASSERT_TRUE(std::isfinite(v));
    prev = v;
  }
}

TEST(Rho, LogAndLinearTablesAgree) {
  for (double u : {3.0, 7.0, 10.0, 25.0}) {
    EXPECT_NEAR(solver().ln_rho(u), solver().ln_rho_linear(u), 1e-6) << u;
  }
  EXPECT_TRUE(std::isfinite(solver().ln_rho(50.0)));
  EXPECT_LT(solver().ln_rho(50.0), 0.0);
}

TEST(Rho, Errors) {
  EXPECT_THROW(solver().rho(-0.1), sb::DomainError);
  EXPECT_THROW(solver().rho(100.5), sb::DomainError);
  EXPECT_THROW(sb::RhoSolver(0.003), sb::DomainError);
  EXPECT_THROW(sb::RhoSolver(0.0), sb::DomainError);
}

TEST(RhoAsymptote, DirectValues) {
  const double e2 = std::exp(2.0);
  EXPECT_NEAR(sb::rho_asymptote(e2, sb::RhoAsymptote::kUL), -2.0 * e2, 1e-12);
  EXPECT_NEAR(sb::rho_asymptote(20.0, sb::RhoAsymptote::kUL2), -81.86, 0.01);
  EXPECT_THROW(sb::rho_asymptote(2.0, sb::RhoAsymptote::kUL2), sb::DomainError);
}

TEST(RhoAsymptote, UL2WithinOrderTermAtFifty) {
  const double u = 50.0;
  const double ratio = solver().ln_rho(u) / sb::rho_asymptote(u, sb::RhoAsymptote::kUL2);
  const double tol = 2.0 * std::log(std::log(std::log(u))) / std::log(std::log(u));
  EXPECT_LT(std::abs(ratio - 1.0), tol);
}

TEST(Rho, DensityAtUTwo) {
  const sb::PrimeTable table(1000000);
  const double density = double(sb::psi_naive(table, {1000000, 1000.0})) / 1e6;
  EXPECT_LT(std::abs(density - solver().rho(2.0)), 0.25 * solver().rho(2.0));
}

}  // namespace
