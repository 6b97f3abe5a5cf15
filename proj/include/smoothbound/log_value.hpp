#ifndef SMOOTHBOUND_LOG_VALUE_HPP
#define SMOOTHBOUND_LOG_VALUE_HPP

#include <algorithm>
#include <cmath>
#include <compare>
#include <limits>

namespace smoothbound {

// A nonnegative quantity stored as its natural logarithm. Zero is -inf.
//
// Every psi-scale quantity in this library grows like e^M with M = ln x, so
// sums and products are carried on the log scale throughout.
class LogValue {
 public:
  constexpr LogValue() = default;

  static constexpr LogValue zero() { return LogValue(); }
  static constexpr LogValue one() { return from_log(0.0); }
  static constexpr LogValue from_log(double log) {
    LogValue v;
    v.log_ = log;
    return v;
  }
  static LogValue from_linear(double value) {
    return value <= 0.0 ? zero() : from_log(std::log(value));
  }

  constexpr double log() const { return log_; }
  double linear() const { return std::exp(log_); }
  constexpr bool is_zero() const {
    return log_ == -std::numeric_limits<double>::infinity();
  }

  LogValue& operator*=(LogValue rhs) {
    log_ = (is_zero() || rhs.is_zero()) ? zero().log_ : log_ + rhs.log_;
    return *this;
  }
  LogValue& operator/=(LogValue rhs) {
    log_ = is_zero() ? log_ : log_ - rhs.log_;
    return *this;
  }
  // Max-shifted: log(e^a + e^b) = max + log1p(e^{min - max}).
  LogValue& operator+=(LogValue rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    const double hi = std::max(log_, rhs.log_);
    const double lo = std::min(log_, rhs.log_);
    log_ = hi + std::log1p(std::exp(lo - hi));
    return *this;
  }

  friend LogValue operator*(LogValue a, LogValue b) { return a *= b; }
  friend LogValue operator/(LogValue a, LogValue b) { return a /= b; }
  friend LogValue operator+(LogValue a, LogValue b) { return a += b; }

  friend constexpr auto operator<=>(LogValue a, LogValue b) {
    return a.log_ <=> b.log_;
  }
  friend constexpr bool operator==(LogValue a, LogValue b) {
    return a.log_ == b.log_;
  }

 private:
  double log_ = -std::numeric_limits<double>::infinity();
};

// Accumulates many LogValue terms against a running maximum. Adding a term
// costs one exp; the scaled partial sum is rescaled only when the maximum
// moves, so logs of any magnitude are safe.
class LogSum {
 public:
  void add(LogValue term) { add_log(term.log()); }

  void add_log(double log_term) {
    if (log_term == -std::numeric_limits<double>::infinity()) return;
    if (scaled_ == 0.0) {
      max_ = log_term;
      scaled_ = 1.0;
    } else if (log_term > max_) {
      scaled_ = scaled_ * std::exp(max_ - log_term) + 1.0;
      max_ = log_term;
    } else {
      scaled_ += std::exp(log_term - max_);
    }
  }

  LogValue value() const {
    return scaled_ == 0.0 ? LogValue::zero()
                          : LogValue::from_log(max_ + std::log(scaled_));
  }

 private:
  double max_ = 0.0;
  double scaled_ = 0.0;
};

}  // namespace smoothbound

#endif  // SMOOTHBOUND_LOG_VALUE_HPP
