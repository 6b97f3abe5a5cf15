#include "smoothbound/primes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "smoothbound/errors.hpp"

namespace smoothbound {

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit) {
  if (limit < 2) throw DomainError("prime table limit must be at least 2");
  if (limit > 0xFFFFFFFFull) throw RangeError("prime table limit exceeds 2^32-1");

  // Linear sieve: every composite is struck exactly once, by its least prime.
  smallest_factor_.assign(limit + 1, 0);
  primes_.reserve(limit < 100 ? 32 : static_cast<std::size_t>(1.2 * limit / std::log(double(limit))));
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (smallest_factor_[n] == 0) {
      smallest_factor_[n] = static_cast<std::uint32_t>(n);
      primes_.push_back(static_cast<std::uint32_t>(n));
    }
    const std::uint32_t lp = smallest_factor_[n];
    for (std::uint32_t p : primes_) {
      if (p > lp || p * n > limit) break;
      smallest_factor_[p * n] = p;
    }
  }
}

std::uint32_t PrimeTable::smallest_factor(std::uint64_t n) const {
  if (n < 2 || n > limit_) {
    throw RangeError("smallest_factor: " + std::to_string(n) + " outside [2, " +
                     std::to_string(limit_) + "]");
  }
  return smallest_factor_[n];
}

bool PrimeTable::is_prime(std::uint64_t n) const {
  return n >= 2 && smallest_factor(n) == n;
}

std::uint64_t PrimeTable::pi(double t) const {
  if (t < 2.0) return 0;
  if (t > static_cast<double>(limit_)) {
    throw RangeError("prime count requested beyond table limit " + std::to_string(limit_));
  }
  const auto bound = static_cast<std::uint32_t>(std::floor(t));
  return static_cast<std::uint64_t>(
      std::upper_bound(primes_.begin(), primes_.end(), bound) - primes_.begin());
}

std::uint32_t PrimeTable::nth(std::size_t j) const {
  if (j < 1 || j > primes_.size()) {
    throw RangeError("prime index " + std::to_string(j) + " not in table");
  }
  return primes_[j - 1];
}

PrimeTable build_prime_table(std::uint64_t limit) { return PrimeTable(limit); }

std::uint64_t count_primes_in(const PrimeTable& table, double lo, double hi) {
  if (!(lo >= 0.0) || lo > hi) throw DomainError("count_primes_in: need 0 <= lo <= hi");
  if (hi > static_cast<double>(table.limit())) {
    throw RangeError("count_primes_in: hi beyond table limit");
  }
  return table.pi(hi) - table.pi(lo);
}

PrimeBracket bracketing_primes(const PrimeTable& table, double y) {
  if (!(y > 2.0)) throw DomainError("bracketing_primes: y must exceed 2");
  if (y > static_cast<double>(table.largest_prime())) {
    throw DomainError("bracketing_primes: y beyond largest tabulated prime");
  }
  const auto primes = table.primes();
  // First prime >= y is p_{m+1}; everything before it is < y.
  const auto it = std::lower_bound(primes.begin(), primes.end(), y,
                                   [](std::uint32_t p, double v) { return p < v; });
  const auto m = static_cast<std::size_t>(it - primes.begin());
  return {primes[m - 1], primes[m], m};
}

double prime_reciprocal_sum(const PrimeTable& table, double a, double b) {
  if (!(a >= 2.0) || a > b) throw DomainError("prime_reciprocal_sum: need 2 <= a <= b");
  if (b > static_cast<double>(table.limit())) {
    throw RangeError("prime_reciprocal_sum: b beyond table limit");
  }
  const auto primes = table.primes();
  auto it = std::lower_bound(primes.begin(), primes.end(), a,
                             [](std::uint32_t p, double v) { return p < v; });
  double sum = 0.0;
  for (; it != primes.end() && *it <= b; ++it) sum += 1.0 / *it;
  return sum;
}

double reciprocal_sum_estimate(double a, double b) {
  if (!(a > 1.0) || a > b) throw DomainError("reciprocal_sum_estimate: need 1 < a <= b");
  return std::log(std::log(b)) - std::log(std::log(a));
}

bool is_prime_trial_division(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace smoothbound
