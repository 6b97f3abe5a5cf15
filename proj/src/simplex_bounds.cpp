#include "smoothbound/simplex_bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "smoothbound/errors.hpp"

namespace smoothbound {
namespace {

using u128 = LatticeCount;

constexpr double kKnifeEdge = 1e-9;

// ln f(k, m), with f(0, 0) = 1 and f(k > 0, 0) = 0 (an empty interval).
double log_compositions(std::uint64_t k, double m) {
  if (k == 0) return 0.0;
  if (m == 0.0) return -std::numeric_limits<double>::infinity();
  const double kd = static_cast<double>(k);
  return std::lgamma(m + kd) - std::lgamma(m) - std::lgamma(kd + 1.0);
}

double log_poisson(std::uint64_t k, double m) {
  if (k == 0) return 0.0;
  if (m == 0.0) return -std::numeric_limits<double>::infinity();
  const double kd = static_cast<double>(k);
  return kd * std::log(m) - std::lgamma(kd + 1.0);
}

// Exact C(k + m - 1, k) for integer m, saturating to 0 on overflow.
bool binomial_u128(std::uint64_t k, std::uint64_t m, u128& out) {
  if (k == 0) { out = 1; return true; }
  if (m == 0) { out = 0; return true; }
  // C(n, k) built as prod_{j=1..k} (m - 1 + j) / j; each prefix is integral.
  u128 acc = 1;
  const std::uint64_t kk = std::min(k, m - 1);
  const std::uint64_t n = k + m - 1;
  for (std::uint64_t j = 1; j <= kk; ++j) {
    const u128 factor = n - kk + j;
    if (acc > std::numeric_limits<u128>::max() / factor) return false;
    acc = acc * factor / j;
  }
  out = acc;
  return true;
}

std::span<const double> side_coeffs(const ReducedSimplex& s, SimplexSide side) {
  return side == SimplexSide::kLower ? std::span<const double>(s.coeff_lower)
                                     : std::span<const double>(s.coeff_upper);
}

template <typename TermLog>
LogValue weighted_sum(const ReducedSimplex& s, SimplexSide side, std::uint64_t cap,
                      TermLog term_log) {
  LogSum sum;
  enumerate_lattice(
      s, side,
      [&](std::span<const std::uint32_t> z) {
        double lg = 0.0;
        for (std::size_t i = 0; i < z.size(); ++i) lg += term_log(z[i], s.weights[i]);
        sum.add_log(lg);
      },
      cap);
  return sum.value();
}

u128 exact_count(const ReducedSimplex& s, SimplexSide side, std::uint64_t cap) {
  if (s.mode != WeightMode::kExact) {
    throw DomainError("exact lattice count needs exact prime-count weights");
  }
  u128 total = 0;
  enumerate_lattice(
      s, side,
      [&](std::span<const std::uint32_t> z) {
        u128 term = 1;
        for (std::size_t i = 0; i < z.size() && term != 0; ++i) {
          u128 f = 0;
          if (!binomial_u128(z[i], static_cast<std::uint64_t>(s.weights[i]), f) ||
              (f != 0 && term > std::numeric_limits<u128>::max() / f)) {
            throw ResourceError("exact lattice count overflows 128 bits");
          }
          term *= f;
        }
        if (total > std::numeric_limits<u128>::max() - term) {
          throw ResourceError("exact lattice count overflows 128 bits");
        }
        total += term;
      },
      cap);
  return total;
}

}  // namespace

RCase classify_r(double y) {
  if (!(y >= 2.0)) throw DomainError("classify_r: y >= 2 required");
  const double ly = std::log(y);
  const double edge = std::floor(ly) + std::numbers::ln2;
  if (std::abs(ly - edge) < kKnifeEdge) {
    throw DomainError("r rule undefined: ln y is on the boundary floor(ln y) + ln 2");
  }
  return ly < edge ? RCase::kR1 : RCase::kR2;
}

ReducedSimplex build_reduced(const PrimeTable& table, std::uint64_t x, double y,
                             WeightMode mode, ReducedOptions options) {
  if (x < 2) throw DomainError("build_reduced: x >= 2 required");
  if (y > static_cast<double>(table.limit())) {
    throw RangeError("build_reduced: y beyond table limit");
  }
  ReducedSimplex s;
  s.x = x;
  s.y = y;
  s.mode = mode;
  s.rule = classify_r(y);
  const double ly = std::log(y);
  s.r = static_cast<int>(std::floor(ly)) + (options.use_r2 ? 1 : 0);
  s.budget = std::log(static_cast<double>(x));
  for (int i = 1; i <= s.r; ++i) {
    const double lo = y * std::exp(-static_cast<double>(i));
    const double hi = y * std::exp(-static_cast<double>(i - 1));
    s.interval_lo.push_back(lo);
    s.interval_hi.push_back(hi);
    s.coeff_lower.push_back(ly - i + 1);
    s.coeff_upper.push_back(ly - i);
    if (mode == WeightMode::kExact) {
      s.weights.push_back(static_cast<double>(count_primes_in(table, lo, hi)));
    } else {
      s.weights.push_back((std::numbers::e - 1.0) * y / ((ly - i) * std::exp(double(i))));
    }
  }
  return s;
}

LogValue compositions(std::uint64_t k, double m) {
  if (!(m >= 1.0)) throw DomainError("compositions: m >= 1 required");
  return LogValue::from_log(log_compositions(k, m));
}

LogValue signature_count(std::span<const std::uint32_t> z, std::span<const double> m) {
  if (z.size() != m.size()) throw DomainError("signature_count: length mismatch");
  double lg = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (!(m[i] >= 1.0)) {
      throw DomainError("signature_count: weight m_" + std::to_string(i + 1) + " < 1");
    }
    lg += log_compositions(z[i], m[i]);
  }
  return LogValue::from_log(lg);
}

std::uint64_t enumerate_lattice(std::span<const double> coeffs, double budget,
                                const LatticeVisitor& visit, std::uint64_t visit_cap) {
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!(coeffs[i] > 0.0)) {
      throw DomainError("enumerate_lattice: coefficient " + std::to_string(i + 1) +
                        " is not positive, the region is unbounded");
    }
  }
  if (!(budget > 0.0)) return 0;

  const std::size_t r = coeffs.size();
  std::vector<std::uint32_t> z(r, 0);
  std::uint64_t visited = 0;
  auto emit = [&] {
    if (visited == visit_cap) {
      throw ResourceError("enumerate_lattice: visit cap " + std::to_string(visit_cap) +
                              " reached",
                          visited);
    }
    ++visited;
    if (visit) visit(z);
  };
  if (r == 0) {
    emit();
    return visited;
  }
  // Depth-first; used[d] is sum_{i<d} coeffs[i] z_i.
  std::vector<double> used(r + 1, 0.0);
  std::size_t d = 0;
  z[0] = 0;
  while (true) {
    if (d + 1 == r) {
      // Innermost coordinate: all z with used + c z < budget.
      for (z[d] = 0; used[d] + coeffs[d] * z[d] < budget; ++z[d]) emit();
      z[d] = 0;
      // Backtrack to the next feasible outer increment.
      while (true) {
        if (d == 0) return visited;
        --d;
        ++z[d];
        used[d + 1] = used[d] + coeffs[d] * z[d];
        if (used[d + 1] < budget) break;
        z[d] = 0;
      }
      ++d;
    } else {
      used[d + 1] = used[d] + coeffs[d] * z[d];
      ++d;
      z[d] = 0;
    }
  }
}

std::uint64_t enumerate_lattice(const ReducedSimplex& s, SimplexSide side,
                                const LatticeVisitor& visit, std::uint64_t visit_cap) {
  return enumerate_lattice(side_coeffs(s, side), s.budget, visit, visit_cap);
}

LogValue psi_lower(const ReducedSimplex& s, LowerForm form, std::uint64_t visit_cap) {
  return form == LowerForm::kPoisson
             ? weighted_sum(s, SimplexSide::kLower, visit_cap, log_poisson)
             : weighted_sum(s, SimplexSide::kLower, visit_cap, log_compositions);
}

LogValue psi_upper(const ReducedSimplex& s, UpperForm form, std::uint64_t visit_cap) {
  if (form == UpperForm::kExactK) {
    return weighted_sum(s, SimplexSide::kUpper, visit_cap, log_compositions);
  }
  return weighted_sum(s, SimplexSide::kUpper, visit_cap, [](std::uint64_t k, double m) {
    if (k == 0) return 0.0;
    const double kd = static_cast<double>(k);
    return log_poisson(k, m) + kd * kd / (2.0 * m);
  });
}

LatticeCount psi_lower_count(const ReducedSimplex& s, std::uint64_t visit_cap) {
  return exact_count(s, SimplexSide::kLower, visit_cap);
}

LatticeCount psi_upper_count(const ReducedSimplex& s, std::uint64_t visit_cap) {
  return exact_count(s, SimplexSide::kUpper, visit_cap);
}

}  // namespace smoothbound
