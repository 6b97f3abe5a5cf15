#include "smoothbound/iterlog_bounds.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "smoothbound/errors.hpp"

namespace smoothbound {
namespace {

// ln2 x - ln2 y + ln3 x - ln3 y + ln4 x
double main_bracket(const XYQuery& q) {
  return q.lx(2) - q.ly(2) + q.lx(3) - q.ly(3) + q.lx(4);
}

double rewritten_bracket(const XYQuery& q) {
  return std::log(q.u()) + q.lx(3) - q.ly(3) + q.lx(4);
}

double slack_term(const XYQuery& q) { return q.ln_y() * std::log(q.u()); }

// ln y + ln2 y + ln3 y - ln2 x - ln3 x - ln4 x
double model_bracket(const XYQuery& q) {
  return q.ln_y() + q.ly(2) + q.ly(3) - q.lx(2) - q.lx(3) - q.lx(4);
}

}  // namespace

double iter_ln(int k, double x) {
  if (k < 0) throw DomainError("iter_ln: k >= 0 required");
  double v = x;
  for (int level = 1; level <= k; ++level) {
    if (!(v > 0.0)) {
      throw DomainError("iter_ln: ln^(" + std::to_string(level) +
                        ") undefined, argument " + std::to_string(v) + " is not positive");
    }
    v = std::log(v);
  }
  return v;
}

double iter_ln_of_log(int k, double log_v) {
  if (k < 1) throw DomainError("iter_ln_of_log: k >= 1 required");
  double v = log_v;
  for (int level = 2; level <= k; ++level) {
    if (!(v > 0.0)) {
      throw DomainError("iter_ln: ln^(" + std::to_string(level) +
                        ") undefined, argument " + std::to_string(v) + " is not positive");
    }
    v = std::log(v);
  }
  return v;
}

XYQuery::XYQuery(double ln_x, double ln_y) : ln_x_(ln_x), ln_y_(ln_y), u_(ln_x / ln_y) {}

XYQuery XYQuery::from_values(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) throw DomainError("XYQuery: x, y > 0 required");
  return from_logs(std::log(x), std::log(y));
}

XYQuery XYQuery::from_logs(double ln_x, double ln_y) {
  if (!(ln_x > std::numbers::e)) throw DomainError("XYQuery: x > e^e required");
  if (!(ln_y > 1.0)) throw DomainError("XYQuery: y > e required");
  return XYQuery(ln_x, ln_y);
}

double log_ratio_residual(const XYQuery& q) {
  return q.lx(2) - q.ly(2) - std::log(q.u());
}

double ln_psi_lower_bound_formula(const XYQuery& q, double a_lower) {
  return -q.u() * (main_bracket(q) - a_lower);
}

double ln_psi_lower_bound_rewritten(const XYQuery& q, double a_lower) {
  return -q.u() * (rewritten_bracket(q) - a_lower);
}

double ln_psi_lower_ratio(const XYQuery& q, double a_lower) {
  return 1.0 - (q.lx(2) + q.lx(3) + q.lx(4)) / q.ln_y() +
         (a_lower + q.ly(2) + q.ly(3)) / q.ln_y();
}

double ln_psi_lower_bound(const XYQuery& q, double a_lower, double theta) {
  if (!(theta > 0.0 && theta < 1.0)) {
    throw DomainError("ln_psi_lower_bound: 0 < theta < 1 violated");
  }
  if (!(std::pow(q.ln_y(), 1.0 - theta) < q.lx(2))) {
    throw DomainError("ln_psi_lower_bound: exp((ln y)^{1-theta}) < ln x violated");
  }
  if (!(q.lx(2) < 0.5 * q.ln_y())) {
    throw DomainError("ln_psi_lower_bound: ln x < sqrt(y) violated");
  }
  return ln_psi_lower_bound_formula(q, a_lower);
}

double ln_psi_upper_bound_formula(const XYQuery& q, double a_upper, bool with_slack) {
  double out = -q.u() * (main_bracket(q) - a_upper);
  if (with_slack) out += slack_term(q);
  return out;
}

double ln_psi_upper_bound_rewritten(const XYQuery& q, double a_upper, bool with_slack) {
  double out = -q.u() * (rewritten_bracket(q) - a_upper);
  if (with_slack) out += slack_term(q);
  return out;
}

double ln_psi_upper_bound(const XYQuery& q, double a_upper, bool with_slack, double nu,
                          double beta) {
  if (!(nu > 2.0)) throw DomainError("ln_psi_upper_bound: nu > 2 violated");
  if (!(beta > 0.0 && beta < 0.5)) {
    throw DomainError("ln_psi_upper_bound: 0 < beta < 1/2 violated");
  }
  if (!(nu * q.ly(2) < q.lx(2))) {
    throw DomainError("ln_psi_upper_bound: (ln y)^nu < ln x violated");
  }
  if (!(q.lx(2) < beta * q.ln_y())) {
    throw DomainError("ln_psi_upper_bound: ln x < y^beta violated");
  }
  return ln_psi_upper_bound_formula(q, a_upper, with_slack);
}

double generalized_bound(const XYQuery& q, double a, int k) {
  if (k < 2) throw DomainError("generalized_bound: k >= 2 required");
  double bracket = -a;
  for (int j = 2; j <= k + 1; ++j) bracket += q.lx(j);
  for (int j = 2; j <= k; ++j) bracket -= q.ly(j);
  return 1.0 - bracket / q.ln_y();
}

double psi_model(const XYQuery& q, double a) { return q.u() * (model_bracket(q) + a); }

double empirical_a_from_log(const XYQuery& q, double ln_psi) {
  return ln_psi / q.u() - model_bracket(q);
}

double empirical_a(const XYQuery& q, std::uint64_t psi_exact) {
  if (psi_exact < 1) throw DomainError("empirical_a: psi >= 1 required");
  return empirical_a_from_log(q, std::log(static_cast<double>(psi_exact)));
}

IterlogReport iterlog_estimates(const XYQuery& q, double nu, double beta) {
  if (!(nu > 0.0 && nu < 1.0)) throw DomainError("iterlog_estimates: 0 < nu < 1 violated");
  if (!(beta > 0.0)) throw DomainError("iterlog_estimates: beta > 0 violated");
  if (!(std::pow(q.ln_y(), nu) < q.lx(2))) {
    throw DomainError("iterlog_estimates: exp((ln y)^nu) < ln x violated");
  }
  if (!(q.lx(2) < beta * q.ln_y())) {
    throw DomainError("iterlog_estimates: ln x < y^beta violated");
  }
  const double u = q.u();
  IterlogReport r;
  r.residual_x3 = q.lx(3) - iter_ln(2, u);
  r.residual_x4 = q.lx(4) - iter_ln(3, u);
  r.residual_y4 = q.ly(4) - iter_ln(4, u);
  r.y3_gap_low = q.ly(3) - iter_ln(3, u);
  r.y3_gap_high = iter_ln(3, u) + std::log(1.0 / nu) - q.ly(3);
  r.x2_exceeds_log_u = std::log(u) < q.lx(2);
  return r;
}

}  // namespace smoothbound
