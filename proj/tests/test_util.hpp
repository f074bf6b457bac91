#pragma once

#include <Eigen/Core>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>

#include "hw/exponent.hpp"
#include "hw/rng.hpp"

namespace tu {

inline double rel_err(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) return (std::isinf(a) && std::isinf(b)) ? 0.0 : 1.0;
  const double m = std::fmax(std::fabs(a), std::fabs(b));
  return m == 0.0 ? 0.0 : std::fabs(a - b) / m;
}

/// Magnitude log-uniform in [lo, hi], sign chosen by a coin flip.
inline double random_exponent_value(hw::SplitMix64& g, double lo = 1e-2, double hi = 1e2) {
  const double mag = std::exp(g.uniform(std::log(lo), std::log(hi)));
  return (g.next() & 1) ? mag : -mag;
}

inline hw::Exponent random_exponent(hw::SplitMix64& g, double lo = 1e-2, double hi = 1e2) {
  return hw::Exponent::finite(random_exponent_value(g, lo, hi));
}

inline std::complex<double> random_entry(hw::SplitMix64& g, double lo, double hi) {
  const double mod = std::exp(g.uniform(std::log(lo), std::log(hi)));
  const double phase = g.uniform(0.0, 2.0 * M_PI);
  return std::polar(mod, phase);
}

inline Eigen::VectorXcd random_cvector(hw::SplitMix64& g, Eigen::Index n, double lo = 1e-3,
                                       double hi = 1e3) {
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = random_entry(g, lo, hi);
  return v;
}

struct OpConfig {
  hw::Exponent s = hw::Exponent::finite(1);
  hw::Exponent t = hw::Exponent::finite(1);
  Eigen::VectorXcd v;
};

/// Deterministic draw of a configuration classifying as the requested case,
/// cycling through that case's sub-regimes. Exponent magnitudes are
/// log-uniform in [1e-2, 1e2], entry moduli in [1e-3, 1e3].
inline OpConfig draw_case(hw::SplitMix64& g, Eigen::Index n, char label, int variant) {
  using hw::Exponent;
  OpConfig c;
  c.v = random_cvector(g, n);
  auto mag = [&] { return std::exp(g.uniform(std::log(1e-2), std::log(1e2))); };
  auto zero_some_entry = [&] { c.v[static_cast<Eigen::Index>(g.below(static_cast<std::uint64_t>(n)))] = 0.0; };
  switch (label) {
    case 'A': {  // s < 0 < t, v != 0
      c.s = (variant % 4 == 1) ? Exponent::minus_infinity() : Exponent::finite(-mag());
      c.t = (variant % 4 == 2) ? Exponent::plus_infinity() : Exponent::finite(mag());
      if (variant % 5 == 3 && n > 2) zero_some_entry();  // still nonzero overall
      break;
    }
    case 'B': {
      switch (variant % 10) {
        case 0:
          c.v.setZero();
          c.s = random_exponent(g);
          c.t = random_exponent(g);
          break;
        case 1:
        case 2:
        case 3: {  // t < 0 with a vanishing entry
          zero_some_entry();
          c.s = (variant % 3 == 0) ? Exponent::minus_infinity() : random_exponent(g);
          c.t = (variant % 4 == 0) ? Exponent::minus_infinity() : Exponent::finite(-mag());
          break;
        }
        default:  // s = +inf
          c.s = Exponent::plus_infinity();
          c.t = (variant % 7 == 4) ? Exponent::minus_infinity() : random_exponent(g);
          if (variant % 6 == 5) zero_some_entry();
          if (variant % 6 == 5 && c.t.value() < 0) c.t = Exponent::finite(mag());
          break;
      }
      break;
    }
    case 'C': {
      double a = mag(), b = mag();
      while (a == b) b = mag();
      const double hi = std::fmax(a, b), lo = std::fmin(a, b);
      switch (variant % 3) {
        case 0:  // 0 < t < s
          c.s = Exponent::finite(hi);
          c.t = Exponent::finite(lo);
          if (variant % 7 == 0) zero_some_entry();
          break;
        case 1:  // t < s < 0
          c.s = Exponent::finite(-lo);
          c.t = Exponent::finite(-hi);
          break;
        default:  // t < 0 < s
          c.s = Exponent::finite(a);
          c.t = Exponent::finite(-b);
          break;
      }
      break;
    }
    case 'D': {
      double a = mag(), b = mag();
      const double hi = std::fmax(a, b), lo = std::fmin(a, b);
      switch (variant % 5) {
        case 0:  // 0 < s <= t
          c.s = Exponent::finite(lo);
          c.t = Exponent::finite(hi);
          break;
        case 1:  // s = t
          c.s = Exponent::finite(a);
          c.t = c.s;
          break;
        case 2:  // 0 < s, t = +inf
          c.s = Exponent::finite(a);
          c.t = Exponent::plus_infinity();
          break;
        case 3:  // s <= t < 0
          c.s = Exponent::finite(-hi);
          c.t = Exponent::finite(-lo);
          break;
        default:  // s = -inf, t < 0
          c.s = Exponent::minus_infinity();
          c.t = Exponent::finite(-a);
          break;
      }
      break;
    }
    case 'E': {
      c.t = Exponent::minus_infinity();
      switch (variant % 4) {
        case 0:
        case 1:
          c.s = Exponent::finite(mag());
          break;
        case 2:
          c.s = Exponent::finite(-mag());
          break;
        default:
          c.s = Exponent::minus_infinity();
          break;
      }
      break;
    }
    default:
      break;
  }
  return c;
}

}  // namespace tu
