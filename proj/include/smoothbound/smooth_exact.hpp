#ifndef SMOOTHBOUND_SMOOTH_EXACT_HPP
#define SMOOTHBOUND_SMOOTH_EXACT_HPP

#include <cstddef>
#include <cstdint>

#include "smoothbound/primes.hpp"

namespace smoothbound {

// Which integers k <= x count as y-smooth.
enum class Convention {
  kInclusive,  // largest prime factor <= y; k = 1 counts
  kStrict,     // largest prime factor < y; k = 1 counts
  kFromTwo,    // as kInclusive but k = 1 excluded
};

struct SmoothQuery {
  std::uint64_t x = 1;
  double y = 2.0;
  Convention convention = Convention::kInclusive;
};

// Brute force: factor every k <= x through the table's least-prime-factor
// sieve. Requires x <= table.limit().
std::uint64_t psi_naive(const PrimeTable& table, const SmoothQuery& query);

// Integers k <= x (k = 1 included) whose prime factors all lie in (lo, hi].
// Brute-force oracle for the reduced-simplex sandwich.
std::uint64_t psi_naive_in_range(const PrimeTable& table, std::uint64_t x,
                                 double lo, double hi);

struct RecursiveOptions {
  // Cap on memo entries (8 bytes each).
  std::size_t memo_budget = std::size_t{1} << 24;
};

// Memoized recursion over prime powers,
//   psi(v, p_k) = sum_{j >= 0, p_k^j <= v} psi(v / p_k^j, p_{k-1}),
// keyed on (floor(v), k). Needs primes up to min(x, y) in the table.
// Throws ResourceError when the memo would exceed the budget.
std::uint64_t psi_recursive(const PrimeTable& table, const SmoothQuery& query,
                            RecursiveOptions options = {});

// psi(x, sqrt x) / x, inclusive convention, x in [4, table.limit()].
double half_smooth_fraction(const PrimeTable& table, std::uint64_t x);

// Upper bounds for psi(x, p_k), p_k the least prime >= y:
//   two_prime_log    ln(sqrt(x) / ln 2)                     (bound at k = 1)
//   product_log      ln(sqrt(x) / (ln 2 prod_{j=2..k} (1 - p_j^{-1/2})))
//   exponential_log  ln(sqrt(x) exp(C sqrt(p_k) / ln p_k))
struct SqrtUpperBound {
  std::uint32_t prime = 2;
  std::size_t index = 1;
  double two_prime_log = 0.0;
  double product_log = 0.0;
  double exponential_log = 0.0;
};

SqrtUpperBound psi_sqrt_upper(const PrimeTable& table, std::uint64_t x, double y,
                              double constant);

// Smallest C for which the exponential form dominates the product form for
// every p_k <= max_prime.
double sqrt_bound_constant(const PrimeTable& table, std::uint32_t max_prime);

}  // namespace smoothbound

#endif  // SMOOTHBOUND_SMOOTH_EXACT_HPP
