#pragma once

#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hw {

/// A weight exponent: a finite nonzero real, +infinity, or -infinity.
///
/// Stored as a double so that the natural ordering -inf < q < +inf is the
/// ordering of exponents. Zero (and anything within 1e-300 of it, whose
/// reciprocal would overflow) is rejected at construction.
class Exponent {
 public:
  static Exponent finite(double q) {
    if (std::isnan(q)) throw std::invalid_argument("exponent must not be NaN");
    if (!std::isfinite(q)) throw std::invalid_argument("use plus_infinity()/minus_infinity()");
    if (std::fabs(q) < kMinMagnitude)
      throw std::invalid_argument("exponent magnitude below 1e-300 is indistinguishable from 0");
    return Exponent(q);
  }
  static Exponent plus_infinity() noexcept { return Exponent(kInf); }
  static Exponent minus_infinity() noexcept { return Exponent(-kInf); }

  /// Accepts a decimal literal, "inf", "+inf" or "-inf".
  static Exponent parse(std::string_view text);

  bool is_finite() const noexcept { return std::isfinite(q_); }
  bool is_plus_infinity() const noexcept { return q_ == kInf; }
  bool is_minus_infinity() const noexcept { return q_ == -kInf; }

  /// The exponent as a double; +-inf for the infinite exponents.
  double value() const noexcept { return q_; }

  Exponent operator-() const noexcept { return Exponent(-q_); }

  friend bool operator==(Exponent a, Exponent b) noexcept { return a.q_ == b.q_; }
  friend auto operator<=>(Exponent a, Exponent b) noexcept { return a.q_ <=> b.q_; }

  std::string str() const;

  static constexpr double kMinMagnitude = 1e-300;

 private:
  explicit Exponent(double q) noexcept : q_(q) {}
  static constexpr double kInf = std::numeric_limits<double>::infinity();
  double q_;
};

}  // namespace hw
