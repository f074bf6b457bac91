#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <stdexcept>

namespace hw {

/// An extended nonnegative real in [0, +inf], the result of any weight
/// evaluation. Never NaN, never negative.
class WeightValue {
 public:
  WeightValue() noexcept : v_(0.0) {}
  WeightValue(double v) : v_(v) {  // NOLINT: implicit by design, weights are numbers
    if (std::isnan(v_) || v_ < 0.0)
      throw std::invalid_argument("weight value must lie in [0, inf]");
  }
  static WeightValue infinity() noexcept {
    WeightValue w;
    w.v_ = std::numeric_limits<double>::infinity();
    return w;
  }

  double value() const noexcept { return v_; }
  bool is_infinite() const noexcept { return std::isinf(v_); }
  bool is_zero() const noexcept { return v_ == 0.0; }

  friend bool operator==(WeightValue a, WeightValue b) noexcept { return a.v_ == b.v_; }
  friend auto operator<=>(WeightValue a, WeightValue b) noexcept { return a.v_ <=> b.v_; }

 private:
  double v_;
};

/// Relative closeness on [0, inf]: infinities match only each other, zeros
/// match exactly, otherwise |a-b| <= tol * max(a, b).
inline bool weights_close(double a, double b, double tol) {
  if (std::isinf(a) || std::isinf(b)) return std::isinf(a) && std::isinf(b);
  const double m = std::fmax(std::fabs(a), std::fabs(b));
  if (m == 0.0) return true;
  return std::fabs(a - b) <= tol * m;
}

inline bool weights_close(WeightValue a, WeightValue b, double tol) {
  return weights_close(a.value(), b.value(), tol);
}

}  // namespace hw
