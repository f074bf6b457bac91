#pragma once

#include <Eigen/Core>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "hw/exponent.hpp"
#include "hw/log_domain.hpp"
#include "hw/weight_value.hpp"

namespace hw {

/// How a Hoelder weight sits in the hw / pseudonorm / norm hierarchy.
enum class WeightClass { HwOnly, Pseudonorm, Norm };

namespace detail {

template <typename Derived>
std::vector<double> log_moduli(const Eigen::DenseBase<Derived>& x) {
  EIGEN_STATIC_ASSERT_VECTOR_ONLY(Derived)
  std::vector<double> logs(static_cast<std::size_t>(x.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    using std::abs;
    logs[static_cast<std::size_t>(i)] = std::log(static_cast<double>(abs(x.derived().coeff(i))));
  }
  return logs;
}

}  // namespace detail

/// The Hoelder weight ||x||_p on a complex (or real) vector expression.
///
/// p = +inf and -inf give the max and min entry modulus. For finite q > 0
/// the weight is (sum |x_i|^q)^(1/q); for q < 0 the same unless some entry
/// vanishes, in which case the weight is 0.
template <typename Derived>
WeightValue hoelder_weight(const Eigen::DenseBase<Derived>& x, Exponent p) {
  if (x.size() == 0) throw std::invalid_argument("hoelder_weight: empty vector");
  if (!p.is_finite()) {
    // max / min of the moduli, exact
    using std::abs;
    double best = static_cast<double>(abs(x.derived().coeff(0)));
    for (Eigen::Index i = 1; i < x.size(); ++i) {
      const double m = static_cast<double>(abs(x.derived().coeff(i)));
      best = p.is_plus_infinity() ? std::fmax(best, m) : std::fmin(best, m);
    }
    return WeightValue(best);
  }
  const std::vector<double> logs = detail::log_moduli(x);
  std::vector<double> scratch(logs.size());
  const double lw = log_weight_from_logs(logs, p, scratch);
  return WeightValue(std::exp(lw));
}

/// Classification of ||.||_p on C^n per the exponent: for n = 1 every p gives
/// a norm; for n > 1 a norm iff p >= 1 (including +inf), a pseudonorm iff
/// 0 < p < 1, and a bare homogeneous weight otherwise.
inline WeightClass classify_weight(Exponent p, Eigen::Index n) {
  if (n < 1) throw std::invalid_argument("classify_weight: n must be >= 1");
  if (n == 1) return WeightClass::Norm;
  if (p.value() >= 1.0) return WeightClass::Norm;
  if (p.value() > 0.0) return WeightClass::Pseudonorm;
  return WeightClass::HwOnly;
}

}  // namespace hw
