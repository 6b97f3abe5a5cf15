#include "smoothbound/bertrand.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "smoothbound/errors.hpp"

namespace smoothbound {

std::optional<std::uint32_t> prime_in_interval(const PrimeTable& table, double y, double gamma) {
  if (!(gamma > 1.0)) throw DomainError("prime_in_interval: gamma > 1 required");
  if (!(y >= 0.0)) throw DomainError("prime_in_interval: y >= 0 required");
  const double top = gamma * y;
  if (top > static_cast<double>(table.limit())) {
    throw RangeError("prime_in_interval: gamma y=" + std::to_string(top) +
                     " beyond table limit " + std::to_string(table.limit()));
  }
  const auto primes = table.primes();
  const auto it = std::upper_bound(primes.begin(), primes.end(), y,
                                   [](double v, std::uint32_t p) { return v < p; });
  if (it == primes.end() || !(static_cast<double>(*it) < top)) return std::nullopt;
  return *it;
}

ScanReport scan(const PrimeTable& table, std::uint64_t y_lo, std::uint64_t y_hi, double gamma) {
  if (!(gamma > 1.0)) throw DomainError("scan: gamma > 1 required");
  if (y_lo > y_hi) throw DomainError("scan: y_lo <= y_hi required");
  ScanReport report{gamma, y_lo, y_hi, 0, {}};
  const auto primes = table.primes();
  // next points at the first prime > y.
  auto next = std::upper_bound(primes.begin(), primes.end(), y_lo,
                               [](std::uint64_t v, std::uint32_t p) { return v < p; });
  for (std::uint64_t y = y_lo; y <= y_hi; ++y) {
    while (next != primes.end() && *next <= y) ++next;
    if (next == primes.end()) {
      throw RangeError("scan: no tabulated prime above y=" + std::to_string(y));
    }
    if (!(static_cast<double>(*next) < gamma * static_cast<double>(y))) {
      report.failures.push_back(y);
    }
    ++report.checked;
  }
  return report;
}

double model_log_ratio(const XYQuery& q, double gamma, double a) {
  const XYQuery wider = XYQuery::from_logs(q.ln_x(), q.ln_y() + std::log(gamma));
  return psi_model(wider, a) - psi_model(q, a);
}

double model_log_ratio_floor(const XYQuery& q, double gamma) {
  return (gamma - 1.0) * q.u() * std::log(q.u()) / q.ln_y();
}

double model_y_derivative(const XYQuery& q, double a, double h) {
  // d/dy = (1/y) d/d(ln y); step in ln y.
  const XYQuery up = XYQuery::from_logs(q.ln_x(), q.ln_y() + h);
  const XYQuery down = XYQuery::from_logs(q.ln_x(), q.ln_y() - h);
  return (psi_model(up, a) - psi_model(down, a)) / (2.0 * h) / std::exp(q.ln_y());
}

double model_y_derivative_floor(const XYQuery& q) {
  return q.ln_x() * std::log(q.u()) / (std::exp(q.ln_y()) * q.ln_y() * q.ln_y());
}

}  // namespace smoothbound
