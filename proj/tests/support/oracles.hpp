#ifndef SMOOTHBOUND_TESTS_ORACLES_HPP
#define SMOOTHBOUND_TESTS_ORACLES_HPP

// Independent reference computations used only by tests. Nothing here shares
// code with the library routes it checks.

#include <cstdint>
#include <vector>

namespace oracle {

// Integers 1 <= k <= x (k = 1 counted) whose prime factors all lie in
// (lo, hi], by trial division.
std::uint64_t restricted_count(std::uint64_t x, double lo, double hi);

// Integers 1 <= k <= x whose largest prime factor is <= y (or < y when
// strict), by trial division.
std::uint64_t smooth_count(std::uint64_t x, double y, bool strict);

// Plain recursive enumeration of sum_{i<n} coeff_i z_i <= budget (+slack),
// summing prod_i w_i(z_i) with w = m^z/z! (P) or m^z e^{z^2/m}/z! (Q).
// Returns the natural log of the sum.
double aux_direct_log(double c, double M, bool q_problem);

// Lattice points with sum coeff_i z_i < budget, by nested loops (r <= 3).
std::uint64_t nested_lattice_count(const std::vector<double>& coeffs, double budget);

// max of H on [0, M/c] by a 4001-point grid followed by golden-section
// refinement of the best bracket.
double h_grid_max(double c, double M, double gamma, double a);

// rho(u) for 2 <= u <= 3 from rho(u) = rho(2) - int_2^u (1 - ln(t-1))/t dt,
// composite Simpson with 2n panels.
double rho_on_two_three(double u, int n = 200000);

// min over theta in [0,1] of e^{-theta^2} + e^{-(1-theta)^2}, by grid and
// golden-section on each half.
double neighbor_factor_min();

}  // namespace oracle

#endif  // SMOOTHBOUND_TESTS_ORACLES_HPP
