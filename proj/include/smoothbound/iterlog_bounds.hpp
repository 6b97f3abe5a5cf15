#ifndef SMOOTHBOUND_ITERLOG_BOUNDS_HPP
#define SMOOTHBOUND_ITERLOG_BOUNDS_HPP

#include <cstdint>

namespace smoothbound {

// k-fold natural log. Throws DomainError naming the level whose argument is
// not positive.
double iter_ln(int k, double x);

// k-fold log of v given ln v, for k >= 1. Lets callers work with v far
// beyond the double range.
double iter_ln_of_log(int k, double log_v);

// A point (x, y) carried as (ln x, ln y), with u = ln x / ln y.
class XYQuery {
 public:
  // Requires x > e^e and y > e.
  static XYQuery from_values(double x, double y);
  static XYQuery from_logs(double ln_x, double ln_y);

  double ln_x() const { return ln_x_; }
  double ln_y() const { return ln_y_; }
  double u() const { return u_; }

  // ln^{(k)} x and ln^{(k)} y, k >= 1.
  double lx(int k) const { return iter_ln_of_log(k, ln_x_); }
  double ly(int k) const { return iter_ln_of_log(k, ln_y_); }

 private:
  XYQuery(double ln_x, double ln_y);
  double ln_x_;
  double ln_y_;
  double u_;
};

// ln2 x - ln2 y - ln u; zero up to rounding.
double log_ratio_residual(const XYQuery& q);

// Bounds on ln(psi(x, y) / x). The *_formula versions evaluate anywhere the
// iterated logs exist; the checked versions first test the parameter domain.

// -u [ln2 x - ln2 y + ln3 x - ln3 y + ln4 x - a_lower]
double ln_psi_lower_bound_formula(const XYQuery& q, double a_lower);
// Same bracket with ln u in place of ln2 x - ln2 y.
double ln_psi_lower_bound_rewritten(const XYQuery& q, double a_lower);
// Lower bound on ln psi / ln x:
// 1 - (ln2 x + ln3 x + ln4 x)/ln y + (a_lower + ln2 y + ln3 y)/ln y
double ln_psi_lower_ratio(const XYQuery& q, double a_lower);

// Requires exp((ln y)^{1-theta}) < ln x < sqrt(y), 0 < theta < 1.
double ln_psi_lower_bound(const XYQuery& q, double a_lower, double theta);

// -u [ln2 x - ln2 y + ln3 x - ln3 y + ln4 x - a_upper], plus ln y ln u when
// with_slack is set.
double ln_psi_upper_bound_formula(const XYQuery& q, double a_upper, bool with_slack);
double ln_psi_upper_bound_rewritten(const XYQuery& q, double a_upper, bool with_slack);

// Requires (ln y)^nu < ln x < y^beta, nu > 2, 0 < beta < 1/2.
double ln_psi_upper_bound(const XYQuery& q, double a_upper, bool with_slack, double nu,
                          double beta);

// 1 - (1/ln y)[sum_{j=2}^{k+1} ln^{(j)} x - a - sum_{j=2}^{k} ln^{(j)} y], k >= 2.
// k = 3 gives the ratio form of the main bounds.
double generalized_bound(const XYQuery& q, double a, int k);

// ln psi = u [ln y + ln2 y + ln3 y - ln2 x - ln3 x - ln4 x + a].
double psi_model(const XYQuery& q, double a);

// The a that makes psi_model exact.
double empirical_a_from_log(const XYQuery& q, double ln_psi);
double empirical_a(const XYQuery& q, std::uint64_t psi_exact);

struct IterlogReport {
  double residual_x3 = 0.0;  // ln3 x - ln2 u
  double residual_x4 = 0.0;  // ln4 x - ln3 u
  double residual_y4 = 0.0;  // ln4 y - ln4 u
  double y3_gap_low = 0.0;   // ln3 y - ln3 u
  double y3_gap_high = 0.0;  // ln3 u + ln(1/nu) - ln3 y
  bool x2_exceeds_log_u = false;  // ln u < ln2 x
  // Bracket ln3 u - slack < ln3 y < ln3 u + ln(1/nu) + slack.
  bool in_bracket(double slack) const {
    return y3_gap_low > -slack && y3_gap_high > -slack;
  }
};

// Requires exp((ln y)^nu) < ln x < y^beta with 0 < nu < 1 and beta > 0.
IterlogReport iterlog_estimates(const XYQuery& q, double nu, double beta);

}  // namespace smoothbound

#endif  // SMOOTHBOUND_ITERLOG_BOUNDS_HPP
