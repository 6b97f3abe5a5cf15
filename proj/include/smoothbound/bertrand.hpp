#ifndef SMOOTHBOUND_BERTRAND_HPP
#define SMOOTHBOUND_BERTRAND_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "smoothbound/iterlog_bounds.hpp"
#include "smoothbound/primes.hpp"

namespace smoothbound {

// Smallest prime p with y < p < gamma y. Needs gamma > 1 and
// gamma y <= table.limit().
std::optional<std::uint32_t> prime_in_interval(const PrimeTable& table, double y, double gamma);

struct ScanReport {
  double gamma = 0.0;
  std::uint64_t y_lo = 0;
  std::uint64_t y_hi = 0;
  std::uint64_t checked = 0;
  // Every integer y in [y_lo, y_hi] with no prime in (y, gamma y).
  std::vector<std::uint64_t> failures;
};

// The table must contain the first prime above y_hi.
ScanReport scan(const PrimeTable& table, std::uint64_t y_lo, std::uint64_t y_hi, double gamma);

// ln psi_a(x, gamma y) - ln psi_a(x, y) under psi_model.
double model_log_ratio(const XYQuery& q, double gamma, double a);

// (gamma - 1) u ln u / ln y, the growth the model ratio should exceed.
double model_log_ratio_floor(const XYQuery& q, double gamma);

// Central difference of ln psi_a in y at fixed x, with relative step h.
double model_y_derivative(const XYQuery& q, double a, double h = 1e-6);

// ln x ln u / (y (ln y)^2).
double model_y_derivative_floor(const XYQuery& q);

}  // namespace smoothbound

#endif  // SMOOTHBOUND_BERTRAND_HPP
