#ifndef SMOOTHBOUND_DICKMAN_HPP
#define SMOOTHBOUND_DICKMAN_HPP

#include <cstddef>
#include <vector>

namespace smoothbound {

// Tabulates the Dickman function on a uniform mesh over [0, max_u].
//
// The tables come from the integral-average identity
//   u rho(u) = integral_{u-1}^{u} rho(t) dt,
// discretised with the trapezoid rule. Two independent tables are kept: one
// in linear space and one holding ln rho with a rescaled window sum, so values
// far below the double range stay finite.
class RhoSolver {
 public:
  // 1 / step must be an integer.
  explicit RhoSolver(double step = 1e-3, double max_u = 100.0);

  double step() const { return step_; }
  double max_u() const { return max_u_; }

  // rho(u) for 0 <= u <= max_u. May underflow to 0 for very large u.
  double rho(double u) const;

  // ln rho(u) for 0 <= u <= max_u, from the log-space table.
  double ln_rho(double u) const;

  // ln rho(u) from the linear table; -inf once that table underflows.
  double ln_rho_linear(double u) const;

 private:
  void check_range(double u) const;
  double interpolate(const std::vector<double>& table, double u) const;

  double step_;
  double max_u_;
  std::size_t per_unit_;
  std::vector<double> values_;
  std::vector<double> log_values_;
};

enum class RhoAsymptote {
  kUL,   // -u ln u
  kUL2,  // -u (ln u + ln ln u)
};

// Leading-order approximations to ln rho(u). kUL needs u > 0, kUL2 needs u > e.
double rho_asymptote(double u, RhoAsymptote variant);

}  // namespace smoothbound

#endif  // SMOOTHBOUND_DICKMAN_HPP
