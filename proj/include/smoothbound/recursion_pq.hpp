#ifndef SMOOTHBOUND_RECURSION_PQ_HPP
#define SMOOTHBOUND_RECURSION_PQ_HPP

#include <cstddef>
#include <cmath>
#include <numbers>
#include <vector>

#include "smoothbound/log_value.hpp"

namespace smoothbound {

// 1 + ln(e - 1).
inline const double kAStar = 1.0 + std::log(std::numbers::e - 1.0);

// Lattice budget slack: a point counts when sum (c - i) z_i <= M + kBudgetSlack.
inline constexpr double kBudgetSlack = 1e-9;

enum class AuxKind {
  kP,  // variables z_0..z_{r-1}, weights m^z / z!
  kQ,  // variables z_0..z_r, weights m^z e^{z^2/m} / z!
};

// Coefficients c - i and bases m_i = (e-1) e^{c-i} / (c-i).
struct AuxProblem {
  double c = 2.0;
  double M = 2.0;

  int r() const;
  // Number of lattice variables. For integer c the Q-problem's last
  // variable has coefficient 0 and is dropped.
  int variables(AuxKind kind) const;
  double coefficient(int i) const { return c - i; }
  double base(int i) const;
  std::vector<double> bases(AuxKind kind) const;
};

struct BoundParams {
  double a = 1.5;
  double a_lower = 0.0;
  double a_upper = 2.5;
  double alpha = 5.0;
  double beta = 0.4;
  double theta = 0.5;
  double nu = 2.5;
  double delta = 1.0;
  double gamma = 0.0;
  double q = 1.0;
  double lambda_rate = 1.0;

  // Throws DomainError naming the first violated constraint among
  // a < a*, a_lower < a_upper, 0 < beta < 1/2, 0 < theta < 1.
  void validate() const;
};

// alpha(beta) = beta/2 (1 + beta/2).
double alpha_for_beta(double beta);

struct RecursionOptions {
  std::size_t memo_budget = std::size_t{1} << 24;
};

// F(c, M) = sum_z F(c-1, M - cz) m_0^z / z!, ending in a single-variable sum
// at floor(c) = 1. F = 0 for M < 0.
LogValue f_cm(const AuxProblem& p, RecursionOptions options = {});

// G(c, M) = sum_z G(c-1, M - cz) (m_0^z / z!) e^{z^2/m_0}, ending at c <= 1.
LogValue g_cm(const AuxProblem& p, RecursionOptions options = {});

// H(z) = M(1 + gamma/c) + (a - gamma) z - (M/c) ln c - z ln z
//        - (M/c - z) ln(M/c - z),   0 <= z <= M/c, with 0 ln 0 = 0.
double h_function(double z, double c, double M, double gamma, double a);

struct HMaximum {
  double maximum = 0.0;
  double z0 = 0.0;
  double t0 = 0.0;
  double f_gamma = 0.0;
};

// max H = M(1 - ln M/c + (gamma + f(gamma))/c), f(gamma) = ln(1 + e^{a-gamma}),
// attained at z0 = (M/c) t0, t0 = 1/(1 + e^{gamma - a}).
HMaximum h_max_closed(double c, double M, double gamma, double a);

// e^{-theta^2} + e^{-(1-theta)^2}.
double neighbor_factor(double theta);

struct NeighborCorrection {
  long long z1 = 0;  // ceil(z0)
  long long z2 = 0;  // floor(z0)
  double theta = 0.0;
  double loss_bound = 0.0;
  double factor = 0.0;  // neighbor_factor(theta)
  bool factor_exceeds_one = false;
};

// Integer neighbours of a real maximiser z0 >= 1.
NeighborCorrection integer_neighbor_correction(double z0);

struct SeedCoefficient {
  LogValue value;         // B = exp(-e^{kappa + gamma})
  double m0 = 0.0;        // e^{kappa + gamma}
  bool saturated = false; // e^{kappa + gamma} overflowed
};

SeedCoefficient seed_coefficient(double kappa, double gamma);

enum class DescentForm { kLog1, kLog2 };

struct DescentStep {
  double c_next = 0.0;
  double M_next = 0.0;
  double gamma0 = 0.0;
  double t0 = 0.0;
};

// One step (c, M) -> (c - 1, M(1 - t0)). Needs c > 2 and M > e; kLog2 also
// needs M > e^e.
DescentStep descent_step(double c, double M, const BoundParams& params, DescentForm form);

// 1 <= M <= e^{beta c}.
bool in_domain(double c, double M, double beta);

// Exponent M(1 - (ln M + ln2 M + ln3 M)/(c+1) + (a - alpha + ln c + ln2 c)/(c+1)),
// a claimed lower bound for ln F(c, M).
double lower_bound_exponent(double c, double M, const BoundParams& params);

// Same, after checking c^{1-theta} < ln M < c/2.
double lower_bound_thm(double c, double M, const BoundParams& params);

// Exponent M(1 - (ln M + ln2 M + ln3 M)/c + (a_upper + ln c + ln2 c)/c),
// optionally plus c ln(M/c): a claimed upper bound for ln G(c, M).
double upper_bound_exponent(double c, double M, const BoundParams& params, bool with_slack);

// Same, after checking c^nu < M < e^{beta c}, nu > 2, 0 < beta < 1/2,
// a_upper > a*.
double upper_bound_thm(double c, double M, const BoundParams& params, bool with_slack);

}  // namespace smoothbound

#endif  // SMOOTHBOUND_RECURSION_PQ_HPP
