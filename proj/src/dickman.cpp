#include "smoothbound/dickman.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "smoothbound/errors.hpp"

namespace smoothbound {
namespace {

constexpr std::size_t kRescaleEvery = 64;

}  // namespace

RhoSolver::RhoSolver(double step, double max_u) : step_(step), max_u_(max_u) {
  if (!(step > 0.0) || step > 1.0) throw DomainError("RhoSolver: step must lie in (0, 1]");
  const double units = 1.0 / step;
  per_unit_ = static_cast<std::size_t>(std::llround(units));
  if (std::abs(units - static_cast<double>(per_unit_)) > 1e-9 * units) {
    throw DomainError("RhoSolver: 1/step must be an integer, got " + std::to_string(units));
  }
  if (!(max_u >= 2.0)) throw DomainError("RhoSolver: max_u must be at least 2");

  const std::size_t n = per_unit_;
  const double h = 1.0 / static_cast<double>(n);
  const auto nodes = static_cast<std::size_t>(std::ceil(max_u * static_cast<double>(n))) + 1;
  values_.assign(nodes, 1.0);
  log_values_.assign(nodes, 0.0);

  // Closed form on [1, 2].
  const std::size_t seeded = std::min(nodes, 2 * n + 1);
  for (std::size_t i = n + 1; i < seeded; ++i) {
    const double u = static_cast<double>(i) * h;
    values_[i] = 1.0 - std::log(u);
    log_values_[i] = std::log(values_[i]);
  }
  if (seeded == nodes) return;

  // rho_i (u_i - h/2) = h [rho_{i-n} / 2 + sum_{j=i-n+1}^{i-1} rho_j]
  auto window_sum = [&](std::size_t i) {
    double s = 0.0;
    for (std::size_t j = i - n + 1; j < i; ++j) s += values_[j];
    return s;
  };
  // Same sum for the log table, scaled by exp(-ref).
  auto scaled_window_sum = [&](std::size_t i, double ref) {
    double s = 0.0;
    for (std::size_t j = i - n + 1; j < i; ++j) s += std::exp(log_values_[j] - ref);
    return s;
  };

  double linear_sum = window_sum(seeded);
  double ref = log_values_[seeded - 1];
  double log_sum = scaled_window_sum(seeded, ref);
  for (std::size_t i = seeded; i < nodes; ++i) {
    if ((i - seeded) % kRescaleEvery == 0) {
      linear_sum = window_sum(i);
      ref = log_values_[i - 1];
      log_sum = scaled_window_sum(i, ref);
    }
    const double denom = static_cast<double>(i) * h - 0.5 * h;

    values_[i] = h * (0.5 * values_[i - n] + linear_sum) / denom;
    const double inner = 0.5 * std::exp(log_values_[i - n] - ref) + log_sum;
    log_values_[i] = ref + std::log(h * inner / denom);

    // Slide the window forward: add j = i, drop j = i - n + 1.
    linear_sum += values_[i] - values_[i - n + 1];
    log_sum += std::exp(log_values_[i] - ref) - std::exp(log_values_[i - n + 1] - ref);
  }
}

void RhoSolver::check_range(double u) const {
  if (!(u >= 0.0) || u > max_u_) {
    throw DomainError("rho: u=" + std::to_string(u) + " outside [0, " +
                      std::to_string(max_u_) + "]");
  }
}

double RhoSolver::interpolate(const std::vector<double>& table, double u) const {
  const double pos = u * static_cast<double>(per_unit_);
  auto i = static_cast<std::size_t>(pos);
  if (i + 1 >= table.size()) return table.back();
  const double frac = pos - static_cast<double>(i);
  if (frac == 0.0) return table[i];
  return table[i] + frac * (table[i + 1] - table[i]);
}

double RhoSolver::rho(double u) const {
  check_range(u);
  if (u <= 1.0) return 1.0;
  if (u <= 2.0) return 1.0 - std::log(u);
  return std::exp(interpolate(log_values_, u));
}

double RhoSolver::ln_rho(double u) const {
  check_range(u);
  if (u <= 1.0) return 0.0;
  if (u <= 2.0) return std::log1p(-std::log(u));
  return interpolate(log_values_, u);
}

double RhoSolver::ln_rho_linear(double u) const {
  check_range(u);
  if (u <= 1.0) return 0.0;
  const double v = interpolate(values_, u);
  return v > 0.0 ? std::log(v) : -std::numeric_limits<double>::infinity();
}

double rho_asymptote(double u, RhoAsymptote variant) {
  if (variant == RhoAsymptote::kUL) {
    if (!(u > 0.0)) throw DomainError("rho_asymptote(UL): u > 0 required");
    return -u * std::log(u);
  }
  if (!(u > std::numbers::e)) throw DomainError("rho_asymptote(UL2): u > e required");
  return -u * (std::log(u) + std::log(std::log(u)));
}

}  // namespace smoothbound
