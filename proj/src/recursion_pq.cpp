#include "smoothbound/recursion_pq.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>

#include "smoothbound/errors.hpp"

namespace smoothbound {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double softplus(double v) { return v > 30.0 ? v + std::log1p(std::exp(-v)) : std::log1p(std::exp(v)); }

double logistic(double v) { return 1.0 / (1.0 + std::exp(v)); }

// Memoized sum over the lattice sum_{i<n} (c - i) z_i <= M. A partial
// assignment of z_0..z_{k-1} is summarised exactly by Z = sum z_i and
// W = sum i z_i, since the remaining budget is M - cZ + W.
class AuxSum {
 public:
  AuxSum(const AuxProblem& p, AuxKind kind, std::size_t budget)
      : c_(p.c), M_(p.M), kind_(kind), n_(p.variables(kind)), budget_(budget) {
    for (int i = 0; i < n_; ++i) {
      const double m = p.base(i);
      log_base_.push_back(std::log(m));
      base_.push_back(m);
    }
  }

  LogValue run() {
    if (M_ < 0.0) return LogValue::zero();
    if (n_ == 0) return LogValue::one();
    return LogValue::from_log(level(0, 0, 0));
  }

 private:
  double log_weight(int i, std::uint64_t z) const {
    const double zd = static_cast<double>(z);
    double w = zd * log_base_[i] - std::lgamma(zd + 1.0);
    if (kind_ == AuxKind::kQ) w += zd * zd / base_[i];
    return w;
  }

  double level(int k, std::uint64_t Z, std::uint64_t W) {
    const double remaining = M_ - c_ * static_cast<double>(Z) + static_cast<double>(W);
    const double coeff = c_ - k;
    const double span = std::floor((remaining + kBudgetSlack) / coeff);
    if (span > 1e15) throw ResourceError("aux recursion: budget M too large to enumerate");
    const auto top = static_cast<std::uint64_t>(span);
    charge(top + 1);
    LogSum sum;
    if (k + 1 == n_) {
      for (std::uint64_t z = 0; z <= top; ++z) sum.add_log(log_weight(k, z));
      return sum.value().log();
    }
    if (Z >= (1u << 24) || W >= (std::uint64_t{1} << 32)) {
      throw ResourceError("aux recursion: lattice too large for the memo key");
    }
    const std::uint64_t key = (static_cast<std::uint64_t>(k) << 56) | (Z << 32) | W;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (memo_.size() >= budget_) {
      throw ResourceError("aux recursion: memo budget of " + std::to_string(budget_) +
                          " entries exceeded");
    }
    for (std::uint64_t z = 0; z <= top; ++z) {
      sum.add_log(log_weight(k, z) + level(k + 1, Z + z, W + static_cast<std::uint64_t>(k) * z));
    }
    const double out = sum.value().log();
    memo_.emplace(key, out);
    return out;
  }

  // Leaf sums are not memoized, so the memo size alone does not bound the
  // running time. Cap the total number of terms visited as well.
  void charge(std::uint64_t terms) {
    work_ += terms;
    if (work_ > kWorkPerEntry * budget_) {
      throw ResourceError("aux recursion: work budget of " + std::to_string(kWorkPerEntry * budget_) +
                          " terms exceeded");
    }
  }

  static constexpr std::uint64_t kWorkPerEntry = 16;

  double c_;
  double M_;
  AuxKind kind_;
  int n_;
  std::size_t budget_;
  std::vector<double> log_base_;
  std::vector<double> base_;
  std::unordered_map<std::uint64_t, double> memo_;
  std::uint64_t work_ = 0;
};

void check_problem(const AuxProblem& p) {
  if (!(p.c > 1.0)) throw DomainError("aux problem: c > 1 required");
  if (!std::isfinite(p.M)) throw DomainError("aux problem: M must be finite");
  if (p.c > 200.0) throw DomainError("aux problem: c > 200 is beyond the memo key range");
}

double ln2(double v) { return std::log(std::log(v)); }
double ln3(double v) { return std::log(std::log(std::log(v))); }

}  // namespace

int AuxProblem::r() const { return static_cast<int>(std::floor(c)); }

int AuxProblem::variables(AuxKind kind) const {
  if (kind == AuxKind::kP) return r();
  return c - r() > 0.0 ? r() + 1 : r();
}

double AuxProblem::base(int i) const {
  const double k = c - i;
  return (std::numbers::e - 1.0) * std::exp(k) / k;
}

std::vector<double> AuxProblem::bases(AuxKind kind) const {
  std::vector<double> out;
  for (int i = 0; i < variables(kind); ++i) out.push_back(base(i));
  return out;
}

void BoundParams::validate() const {
  if (!(a < kAStar)) throw DomainError("BoundParams: a < a* violated");
  if (!(a_lower < a_upper)) throw DomainError("BoundParams: a_lower < a_upper violated");
  if (!(beta > 0.0 && beta < 0.5)) throw DomainError("BoundParams: 0 < beta < 1/2 violated");
  if (!(theta > 0.0 && theta < 1.0)) throw DomainError("BoundParams: 0 < theta < 1 violated");
}

double alpha_for_beta(double beta) { return 0.5 * beta * (1.0 + 0.5 * beta); }

LogValue f_cm(const AuxProblem& p, RecursionOptions options) {
  check_problem(p);
  return AuxSum(p, AuxKind::kP, options.memo_budget).run();
}

LogValue g_cm(const AuxProblem& p, RecursionOptions options) {
  check_problem(p);
  return AuxSum(p, AuxKind::kQ, options.memo_budget).run();
}

double h_function(double z, double c, double M, double gamma, double a) {
  if (!(c > 0.0) || !(M > 0.0)) throw DomainError("h_function: c, M > 0 required");
  const double u = M / c;
  if (!(z >= 0.0) || z > u) {
    throw DomainError("h_function: z=" + std::to_string(z) + " outside [0, M/c]");
  }
  auto xlogx = [](double v) { return v > 0.0 ? v * std::log(v) : 0.0; };
  return M * (1.0 + gamma / c) + (a - gamma) * z - u * std::log(c) - xlogx(z) - xlogx(u - z);
}

HMaximum h_max_closed(double c, double M, double gamma, double a) {
  if (!(c > 0.0) || !(M > 0.0)) throw DomainError("h_max_closed: c, M > 0 required");
  HMaximum out;
  out.f_gamma = softplus(a - gamma);
  out.t0 = logistic(gamma - a);
  out.z0 = (M / c) * out.t0;
  out.maximum = M * (1.0 - std::log(M) / c + (gamma + out.f_gamma) / c);
  return out;
}

double neighbor_factor(double theta) {
  return std::exp(-theta * theta) + std::exp(-(1.0 - theta) * (1.0 - theta));
}

NeighborCorrection integer_neighbor_correction(double z0) {
  if (!(z0 >= 1.0)) throw DomainError("integer_neighbor_correction: z0 >= 1 required");
  NeighborCorrection out;
  out.z1 = static_cast<long long>(std::ceil(z0));
  out.z2 = static_cast<long long>(std::floor(z0));
  out.theta = static_cast<double>(out.z1) - z0;
  if (out.z1 != out.z2) {
    out.loss_bound = std::max(out.theta * out.theta, (1.0 - out.theta) * (1.0 - out.theta));
  }
  out.factor = neighbor_factor(out.theta);
  out.factor_exceeds_one = out.factor > 1.0;
  return out;
}

SeedCoefficient seed_coefficient(double kappa, double gamma) {
  SeedCoefficient out;
  out.m0 = std::exp(kappa + gamma);
  if (!std::isfinite(out.m0)) {
    out.saturated = true;
    out.m0 = std::numeric_limits<double>::max();
    out.value = LogValue::from_log(-std::numeric_limits<double>::max());
  } else {
    out.value = LogValue::from_log(-out.m0);
  }
  return out;
}

DescentStep descent_step(double c, double M, const BoundParams& params, DescentForm form) {
  if (!(c > 2.0)) throw DomainError("descent_step: c > 2 required");
  if (!(M > std::numbers::e)) throw DomainError("descent_step: M > e required");
  DescentStep out;
  out.c_next = c - 1.0;
  out.gamma0 = params.a - params.alpha + std::log(c - 1.0) - ln2(M);
  if (form == DescentForm::kLog2) {
    if (!(std::log(M) > std::numbers::e)) {
      throw DomainError("descent_step: LOG2 form needs ln3 M > 0, i.e. M > e^e");
    }
    out.gamma0 += ln2(c - 1.0) - ln3(M);
  }
  out.t0 = logistic(out.gamma0 - params.a);
  // M (1 - t0) without cancellation.
  out.M_next = M / (1.0 + std::exp(params.a - out.gamma0));
  return out;
}

bool in_domain(double c, double M, double beta) {
  if (!(M >= 1.0)) return false;
  const double edge = beta * c;
  if (edge < 700.0) return M <= std::exp(edge);
  return std::log(M) <= edge;
}

double lower_bound_exponent(double c, double M, const BoundParams& params) {
  const double lm = std::log(M);
  return M * (1.0 - (lm + ln2(M) + ln3(M)) / (c + 1.0) +
              (params.a - params.alpha + std::log(c) + ln2(c)) / (c + 1.0));
}

double lower_bound_thm(double c, double M, const BoundParams& params) {
  if (!(params.theta > 0.0 && params.theta < 1.0)) {
    throw DomainError("lower_bound_thm: 0 < theta < 1 violated");
  }
  if (!(params.a < kAStar)) throw DomainError("lower_bound_thm: a < a* violated");
  const double lm = M > 0.0 ? std::log(M) : -kInf;
  if (!(std::pow(c, 1.0 - params.theta) < lm)) {
    throw DomainError("lower_bound_thm: c^{1-theta} < ln M violated");
  }
  if (!(lm < 0.5 * c)) throw DomainError("lower_bound_thm: ln M < c/2 violated");
  if (!(lm > 1.0) || !(c > std::numbers::e)) {
    throw DomainError("lower_bound_thm: ln3 M and ln2 c must be defined");
  }
  return lower_bound_exponent(c, M, params);
}

double upper_bound_exponent(double c, double M, const BoundParams& params, bool with_slack) {
  const double lm = std::log(M);
  double out = M * (1.0 - (lm + ln2(M) + ln3(M)) / c + (params.a_upper + std::log(c) + ln2(c)) / c);
  if (with_slack) out += c * std::log(M / c);
  return out;
}

double upper_bound_thm(double c, double M, const BoundParams& params, bool with_slack) {
  if (!(params.nu > 2.0)) throw DomainError("upper_bound_thm: nu > 2 violated");
  if (!(params.beta > 0.0 && params.beta < 0.5)) {
    throw DomainError("upper_bound_thm: 0 < beta < 1/2 violated");
  }
  if (!(params.a_upper > kAStar)) throw DomainError("upper_bound_thm: a_upper > a* violated");
  if (!(c > std::numbers::e)) throw DomainError("upper_bound_thm: ln2 c must be defined");
  if (!(std::pow(c, params.nu) < M)) throw DomainError("upper_bound_thm: c^nu < M violated");
  if (!(std::log(M) < params.beta * c)) {
    throw DomainError("upper_bound_thm: M < e^{beta c} violated");
  }
  return upper_bound_exponent(c, M, params, with_slack);
}

}  // namespace smoothbound
