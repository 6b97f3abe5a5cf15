#ifndef SMOOTHBOUND_SIMPLEX_BOUNDS_HPP
#define SMOOTHBOUND_SIMPLEX_BOUNDS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "smoothbound/log_value.hpp"
#include "smoothbound/primes.hpp"

namespace smoothbound {

enum class WeightMode { kExact, kPnt };

// Which side of the knife edge ln y = floor(ln y) + ln 2 the input falls on.
enum class RCase { kR1, kR2 };

enum class SimplexSide { kLower, kUpper };

// Primes in (y/e^r, y] split into intervals J_i = (y/e^i, y/e^{i-1}],
// i = 1..r. Index 0 of every vector is J_1.
struct ReducedSimplex {
  std::uint64_t x = 0;
  double y = 0.0;
  int r = 0;
  RCase rule = RCase::kR1;
  WeightMode mode = WeightMode::kExact;
  double budget = 0.0;                // ln x
  std::vector<double> coeff_lower;    // ln y - i + 1
  std::vector<double> coeff_upper;    // ln y - i
  std::vector<double> weights;        // m_i
  std::vector<double> interval_lo;    // y / e^i
  std::vector<double> interval_hi;    // y / e^{i-1}

  // Left end of the covered prime range, y / e^r.
  double cutoff() const { return interval_lo.empty() ? y : interval_lo.back(); }
};

struct ReducedOptions {
  // r = floor(ln y) by default; true selects floor(ln y) + 1.
  bool use_r2 = false;
};

// Throws DomainError when ln y is within 1e-9 of floor(ln y) + ln 2.
RCase classify_r(double y);

ReducedSimplex build_reduced(const PrimeTable& table, std::uint64_t x, double y,
                             WeightMode mode, ReducedOptions options = {});

// C(k + m - 1, k); real m uses Gamma(m + k) / (Gamma(m) k!).
LogValue compositions(std::uint64_t k, double m);

// prod_i compositions(z_i, m_i). Throws DomainError if some m_i < 1.
LogValue signature_count(std::span<const std::uint32_t> z, std::span<const double> m);

using LatticeVisitor = std::function<void(std::span<const std::uint32_t>)>;

inline constexpr std::uint64_t kDefaultVisitCap = 100'000'000;

// Visits every z >= 0 with sum_i coeffs[i] z_i < budget once and returns the
// count. Coefficients must be positive. Throws ResourceError carrying the
// partial count once more than visit_cap points would be visited.
std::uint64_t enumerate_lattice(std::span<const double> coeffs, double budget,
                                const LatticeVisitor& visit,
                                std::uint64_t visit_cap = kDefaultVisitCap);

std::uint64_t enumerate_lattice(const ReducedSimplex& s, SimplexSide side,
                                const LatticeVisitor& visit,
                                std::uint64_t visit_cap = kDefaultVisitCap);

// Exact lattice-weighted counts can exceed 64 bits.
__extension__ typedef unsigned __int128 LatticeCount;

enum class LowerForm { kPoisson, kExactK };
enum class UpperForm { kExactK, kPBound };

// Sum over the lower simplex of prod m^z/z! (kPoisson) or prod f(z, m).
LogValue psi_lower(const ReducedSimplex& s, LowerForm form,
                   std::uint64_t visit_cap = kDefaultVisitCap);

// Sum over the upper simplex of prod f(z, m) (kExactK) or the relaxed
// prod (m^z/z!) e^{z^2/2m} (kPBound).
LogValue psi_upper(const ReducedSimplex& s, UpperForm form,
                   std::uint64_t visit_cap = kDefaultVisitCap);

// Integer versions of the kExactK sums. Exact-weight simplices only; throws
// ResourceError if the count overflows 128 bits.
LatticeCount psi_lower_count(const ReducedSimplex& s,
                                  std::uint64_t visit_cap = kDefaultVisitCap);
LatticeCount psi_upper_count(const ReducedSimplex& s,
                                  std::uint64_t visit_cap = kDefaultVisitCap);

}  // namespace smoothbound

#endif  // SMOOTHBOUND_SIMPLEX_BOUNDS_HPP
