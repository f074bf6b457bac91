#pragma once

#include <cmath>
#include <limits>

// Extended nonnegative reals [0, inf] with the conventions inf*0 = 0 and
// 1/0 = inf. Sums and powers follow: inf + x = inf, inf^q = inf (q > 0)
// or 0 (q < 0), 0^q = 0 (q > 0) or inf (q < 0).
namespace hw::xr {

inline constexpr double inf = std::numeric_limits<double>::infinity();

inline double mul(double a, double b) {
  if ((a == 0.0 && std::isinf(b)) || (b == 0.0 && std::isinf(a))) return 0.0;
  return a * b;
}

inline double add(double a, double b) { return a + b; }

/// base^q for base in [0, inf] and finite nonzero q.
inline double power(double base, double q) {
  if (base == 0.0) return q > 0.0 ? 0.0 : inf;
  if (std::isinf(base)) return q > 0.0 ? inf : 0.0;
  return std::pow(base, q);
}

}  // namespace hw::xr
