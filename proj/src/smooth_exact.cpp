#include "smoothbound/smooth_exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "smoothbound/errors.hpp"

namespace smoothbound {
namespace {

void validate(const SmoothQuery& q) {
  if (q.x < 1) throw DomainError("smooth query needs x >= 1");
  if (!(q.y >= 2.0)) throw DomainError("smooth query needs y >= 2");
}

bool admits(std::uint32_t largest_factor, const SmoothQuery& q) {
  return q.convention == Convention::kStrict ? largest_factor < q.y
                                             : largest_factor <= q.y;
}

std::uint64_t apply_convention(std::uint64_t with_one, Convention c) {
  return c == Convention::kFromTwo ? with_one - 1 : with_one;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Memo over the values v = floor(X / n). Level k is only consulted for
// v >= p_k^2, so each level stores two ranges: small v in [p_k^2, sqrt X]
// indexed by v, and large v indexed by X / v <= X / p_k^2.
class PsiRecursion {
 public:
  PsiRecursion(std::span<const std::uint32_t> primes, std::uint64_t x,
               std::size_t budget)
      : primes_(primes), x_(x), root_(isqrt(x)) {
    const std::size_t levels = std::min<std::size_t>(primes_.size(), first_index_above(root_));
    std::size_t total = 0;
    for (std::size_t k = 0; k < levels; ++k) {
      const std::uint64_t sq = std::uint64_t{primes_[k]} * primes_[k];
      const std::size_t small = sq <= root_ ? root_ - sq + 1 : 0;
      const std::size_t large = std::min(root_, x_ / sq) + 1;
      rows_.push_back({total, small, sq});
      total += small + large;
      if (total > budget) {
        throw ResourceError("psi_recursive: memo needs more than " + std::to_string(budget) +
                            " entries (budget)");
      }
    }
    memo_.assign(total, 0);
  }

  // psi over primes_[0..k), inclusive of k = 1 (the integer 1).
  std::uint64_t eval(std::uint64_t v, std::size_t k) {
    if (v == 0) return 0;
    if (k == 0 || v == 1) return 1;
    if (primes_[k - 1] >= v) return v;
    if (k == 1) return static_cast<std::uint64_t>(std::bit_width(v));

    // Unroll the j = 0 chain down to primes with p^2 <= v. For p > sqrt(v)
    // only j <= 1 contributes and psi(v / p, p_{k-1}) = floor(v / p).
    const std::size_t k0 = first_index_above(isqrt(v));
    if (k > k0) {
      std::uint64_t total = eval(v, k0);
      for (std::size_t i = k0; i < k; ++i) total += v / primes_[i];
      return total;
    }

    std::uint64_t& slot = memo_[slot_of(v, k - 1)];
    if (slot != 0) return slot;

    const std::uint64_t p = primes_[k - 1];
    std::uint64_t total = 0;
    for (std::uint64_t w = v;; w /= p) {
      total += eval(w, k - 1);
      if (w < p) break;
    }
    slot = total;
    return total;
  }

 private:
  struct Row {
    std::size_t offset;
    std::size_t small;
    std::uint64_t square;
  };

  // Number of primes <= bound.
  std::size_t first_index_above(std::uint64_t bound) const {
    return static_cast<std::size_t>(
        std::upper_bound(primes_.begin(), primes_.end(), bound) - primes_.begin());
  }
  std::size_t slot_of(std::uint64_t v, std::size_t level) const {
    const Row& row = rows_[level];
    if (v <= root_) return row.offset + static_cast<std::size_t>(v - row.square);
    return row.offset + row.small + static_cast<std::size_t>(x_ / v);
  }

  std::span<const std::uint32_t> primes_;
  std::uint64_t x_;
  std::uint64_t root_;
  std::vector<Row> rows_;
  std::vector<std::uint64_t> memo_;
};

}  // namespace

std::uint64_t psi_naive(const PrimeTable& table, const SmoothQuery& q) {
  validate(q);
  if (q.x > table.limit()) {
    throw RangeError("psi_naive: x=" + std::to_string(q.x) + " beyond table limit " +
                     std::to_string(table.limit()));
  }
  // largest[k] = max(spf(k), largest[k / spf(k)]), built bottom-up.
  std::vector<std::uint32_t> largest(q.x + 1, 1);
  std::uint64_t count = 1;  // k = 1
  for (std::uint64_t k = 2; k <= q.x; ++k) {
    const std::uint32_t p = table.smallest_factor(k);
    largest[k] = std::max(p, largest[k / p]);
    if (admits(largest[k], q)) ++count;
  }
  return apply_convention(count, q.convention);
}

std::uint64_t psi_naive_in_range(const PrimeTable& table, std::uint64_t x,
                                 double lo, double hi) {
  if (x < 1) throw DomainError("psi_naive_in_range: x >= 1 required");
  if (x > table.limit()) throw RangeError("psi_naive_in_range: x beyond table limit");
  std::uint64_t count = 1;
  for (std::uint64_t k = 2; k <= x; ++k) {
    std::uint64_t rest = k;
    bool ok = true;
    while (rest > 1 && ok) {
      const std::uint32_t p = table.smallest_factor(rest);
      ok = p > lo && p <= hi;
      rest /= p;
    }
    if (ok) ++count;
  }
  return count;
}

std::uint64_t psi_recursive(const PrimeTable& table, const SmoothQuery& q,
                            RecursiveOptions options) {
  validate(q);
  const double xd = static_cast<double>(q.x);
  const bool everything =
      q.convention == Convention::kStrict ? q.y > xd : q.y >= xd;
  if (everything) return apply_convention(q.x, q.convention);

  // Here y <= x, so only primes up to y matter.
  if (q.y > static_cast<double>(table.limit())) {
    throw RangeError("psi_recursive: y beyond table limit " + std::to_string(table.limit()));
  }
  const auto primes = table.primes();
  std::size_t k = table.pi(q.y);
  if (q.convention == Convention::kStrict && k > 0 && primes[k - 1] == q.y) --k;

  PsiRecursion recursion(primes.first(k), q.x, options.memo_budget);
  return apply_convention(recursion.eval(q.x, k), q.convention);
}

double half_smooth_fraction(const PrimeTable& table, std::uint64_t x) {
  if (x < 4) throw DomainError("half_smooth_fraction: x >= 4 required");
  const SmoothQuery q{x, std::sqrt(static_cast<double>(x)), Convention::kInclusive};
  return static_cast<double>(psi_naive(table, q)) / static_cast<double>(x);
}

SqrtUpperBound psi_sqrt_upper(const PrimeTable& table, std::uint64_t x, double y,
                              double constant) {
  if (x < 1) throw DomainError("psi_sqrt_upper: x >= 1 required");
  if (!(y >= 2.0)) throw DomainError("psi_sqrt_upper: y >= 2 required");
  const auto primes = table.primes();
  const auto it = std::lower_bound(primes.begin(), primes.end(), y,
                                   [](std::uint32_t p, double v) { return p < v; });
  if (it == primes.end()) throw RangeError("psi_sqrt_upper: no tabulated prime >= y");

  SqrtUpperBound out;
  out.prime = *it;
  out.index = static_cast<std::size_t>(it - primes.begin()) + 1;
  const double half_log_x = 0.5 * std::log(static_cast<double>(x));
  out.two_prime_log = half_log_x - std::log(std::numbers::ln2);
  double log_product = 0.0;
  for (std::size_t j = 1; j < out.index; ++j) {
    log_product += std::log1p(-1.0 / std::sqrt(static_cast<double>(primes[j])));
  }
  out.product_log = out.two_prime_log - log_product;
  const double p = out.prime;
  out.exponential_log = half_log_x + constant * std::sqrt(p) / std::log(p);
  return out;
}

double sqrt_bound_constant(const PrimeTable& table, std::uint32_t max_prime) {
  const auto primes = table.primes();
  double log_product = 0.0;
  double worst = 0.0;
  for (std::size_t j = 0; j < primes.size() && primes[j] <= max_prime; ++j) {
    const double p = primes[j];
    if (j > 0) log_product += std::log1p(-1.0 / std::sqrt(p));
    const double excess = -std::log(std::numbers::ln2) - log_product;
    worst = std::max(worst, excess * std::log(p) / std::sqrt(p));
  }
  return worst;
}

}  // namespace smoothbound
