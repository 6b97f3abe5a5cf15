#ifndef SMOOTHBOUND_PRIMES_HPP
#define SMOOTHBOUND_PRIMES_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace smoothbound {

// Least-prime-factor sieve over [2, limit] together with the sorted primes.
// Immutable after construction; all queries are const and thread-safe.
class PrimeTable {
 public:
  // Throws DomainError when limit < 2.
  explicit PrimeTable(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  std::span<const std::uint32_t> primes() const { return primes_; }
  std::uint32_t largest_prime() const { return primes_.back(); }

  // n in [2, limit]; RangeError otherwise.
  std::uint32_t smallest_factor(std::uint64_t n) const;
  bool is_prime(std::uint64_t n) const;

  // Number of primes p <= t, for t <= limit.
  std::uint64_t pi(double t) const;

  // The j-th prime, 1-based (p_1 = 2).
  std::uint32_t nth(std::size_t j) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> smallest_factor_;
  std::vector<std::uint32_t> primes_;
};

PrimeTable build_prime_table(std::uint64_t limit);

// Number of primes in the half-open interval (lo, hi].
std::uint64_t count_primes_in(const PrimeTable& table, double lo, double hi);

// Consecutive primes with lower < y <= upper; `index` is m in p_m = lower.
struct PrimeBracket {
  std::uint32_t lower;
  std::uint32_t upper;
  std::size_t index;
};

PrimeBracket bracketing_primes(const PrimeTable& table, double y);

// Exact sum of 1/p over primes a <= p <= b.
double prime_reciprocal_sum(const PrimeTable& table, double a, double b);

// The companion estimate ln ln b - ln ln a of the reciprocal sum.
double reciprocal_sum_estimate(double a, double b);

// Deterministic trial division. Used to cross-check the sieve.
bool is_prime_trial_division(std::uint64_t n);

}  // namespace smoothbound

#endif  // SMOOTHBOUND_PRIMES_HPP
