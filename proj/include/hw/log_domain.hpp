#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

#include "hw/exponent.hpp"

namespace hw {

inline constexpr double neg_log_inf = -std::numeric_limits<double>::infinity();

/// log(sum_i exp(terms_i)) with the usual max shift. Terms of -inf contribute
/// nothing; an empty span (or all -inf) gives -inf; any +inf term gives +inf.
/// The terms are sorted in place first, which makes the result independent of
/// the caller's entry order (permutations are bit-for-bit neutral).
inline double log_sum_exp(std::span<double> terms) {
  std::sort(terms.begin(), terms.end());
  if (terms.empty()) return neg_log_inf;
  const double m = terms.back();
  if (m == neg_log_inf) return neg_log_inf;
  if (std::isinf(m)) return m;  // +inf dominates
  double s = 0.0;
  for (double t : terms) s += std::exp(t - m);
  return m + std::log(s);
}

/// log of the Hoelder weight given the logs of the entry moduli.
///
/// For finite q the sum runs in the shifted log domain so that extreme q
/// neither overflows nor underflows while the true result is representable.
/// Entries with log modulus -inf (zero entries) are dropped for q > 0 and
/// force the result to -inf (weight zero) for q < 0. All entries dropped
/// gives -inf. scratch must have room for terms.size() doubles.
inline double log_weight_from_logs(std::span<const double> log_moduli, Exponent p,
                                   std::span<double> scratch) {
  if (p.is_plus_infinity()) {
    double m = neg_log_inf;
    for (double l : log_moduli) m = std::fmax(m, l);
    return m;
  }
  if (p.is_minus_infinity()) {
    double m = std::numeric_limits<double>::infinity();
    for (double l : log_moduli) m = std::fmin(m, l);
    return m;
  }
  const double q = p.value();
  std::size_t k = 0;
  for (double l : log_moduli) {
    if (l == neg_log_inf) {
      if (q < 0.0) return neg_log_inf;  // zero entry under a negative exponent
      continue;
    }
    scratch[k++] = q * l;
  }
  if (k == 0) return neg_log_inf;
  return log_sum_exp(scratch.subspan(0, k)) / q;
}

}  // namespace hw
