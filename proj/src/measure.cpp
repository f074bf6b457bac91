#include "hw/measure.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hw/extended.hpp"
#include "hw/log_domain.hpp"

namespace hw {

DiscreteMeasureSpace::DiscreteMeasureSpace(Eigen::ArrayXd masses) : masses_(std::move(masses)) {
  if (masses_.size() < 1) throw std::invalid_argument("measure space: need at least one atom");
  bool positive = false;
  for (Eigen::Index i = 0; i < masses_.size(); ++i) {
    const double m = masses_[i];
    if (std::isnan(m) || m < 0.0) throw std::invalid_argument("measure space: masses lie in [0, inf]");
    if (m > 0.0) positive = true;
  }
  if (!positive) throw std::invalid_argument("measure space: total mass must be positive");
}

StepFunction::StepFunction(Eigen::ArrayXd values) : values_(std::move(values)) {
  if (values_.size() < 1) throw std::invalid_argument("step function: need at least one value");
  for (Eigen::Index i = 0; i < values_.size(); ++i) {
    if (std::isnan(values_[i])) throw std::invalid_argument("step function: NaN value");
    values_[i] = std::fabs(values_[i]);  // only |f| ever matters
  }
}

WeightValue lp_weight(const StepFunction& f, const DiscreteMeasureSpace& space, Exponent p) {
  if (f.size() != space.size()) throw std::invalid_argument("lp_weight: length mismatch");
  const Eigen::ArrayXd& mu = space.masses();
  const Eigen::ArrayXd& fv = f.values();

  if (!p.is_finite()) {
    // Essential supremum / infimum: zero-mass atoms are invisible.
    double best = p.is_plus_infinity() ? 0.0 : xr::inf;
    for (Eigen::Index i = 0; i < fv.size(); ++i) {
      if (mu[i] == 0.0) continue;
      best = p.is_plus_infinity() ? std::fmax(best, fv[i]) : std::fmin(best, fv[i]);
    }
    return WeightValue(best);
  }

  const double q = p.value();
  bool integral_infinite = false;
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(fv.size()));
  for (Eigen::Index i = 0; i < fv.size(); ++i) {
    if (mu[i] == 0.0) continue;  // inf * 0 = 0: the atom contributes nothing
    if (fv[i] == 0.0) {
      if (q < 0.0) integral_infinite = true;  // 1/0 = inf on positive mass
      continue;
    }
    if (std::isinf(fv[i])) {
      if (q > 0.0) integral_infinite = true;
      continue;  // inf^q = 0 for q < 0
    }
    terms.push_back(std::log(mu[i]) + q * std::log(fv[i]));  // mu = inf lands at +inf
  }
  if (integral_infinite) return q > 0.0 ? WeightValue::infinity() : WeightValue(0.0);
  const double lse = log_sum_exp(terms);
  if (lse == neg_log_inf) {
    // Integral exactly zero.
    return q > 0.0 ? WeightValue(0.0) : WeightValue::infinity();
  }
  return WeightValue(std::exp(lse / q));
}

bool in_Lp(const StepFunction& f, const DiscreteMeasureSpace& space, Exponent p) {
  if (p.is_finite() && p.value() > 0.0) return !lp_weight(f, space, p).is_infinite();
  return !lp_weight(f, space, Exponent::plus_infinity()).is_infinite();
}

namespace {

Eigen::ArrayXd pointwise_product(const Eigen::ArrayXd& a, const Eigen::ArrayXd& b) {
  Eigen::ArrayXd out(a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out[i] = xr::mul(a[i], b[i]);
  return out;
}

}  // namespace

InequalityReport check_reverse_hoelder(const StepFunction& f, const StepFunction& g, double r,
                                       double s, const DiscreteMeasureSpace& space) {
  Exponent::finite(r);
  Exponent::finite(s);
  if (std::fabs(1.0 / r + 1.0 / s - 1.0) > 1e-12 || r >= 1.0 || s >= 1.0)
    throw std::invalid_argument("reverse Hoelder needs 1 = 1/r + 1/s with r, s < 1");
  if (f.size() != g.size() || f.size() != space.size())
    throw std::invalid_argument("reverse Hoelder: length mismatch");
  const StepFunction fg(pointwise_product(f.values(), g.values()));
  const double lhs = lp_weight(fg, space, Exponent::finite(1.0)).value();
  const double rhs = xr::mul(lp_weight(f, space, Exponent::finite(r)).value(),
                             lp_weight(g, space, Exponent::finite(s)).value());
  return detail::make_report(lhs, rhs, Direction::TGreater);
}

InequalityReport check_theorem3(const StepFunction& f, const StepFunction& g,
                                const ExponentTriple& triple, const DiscreteMeasureSpace& space) {
  if (f.size() != g.size() || f.size() != space.size())
    throw std::invalid_argument("check_theorem3: length mismatch");
  const StepFunction fg(pointwise_product(f.values(), g.values()));
  const double lhs = lp_weight(fg, space, Exponent::finite(triple.t())).value();
  const double rhs = xr::mul(lp_weight(f, space, Exponent::finite(triple.r())).value(),
                             lp_weight(g, space, Exponent::finite(triple.s())).value());
  return detail::make_report(lhs, rhs, triple.direction());
}

}  // namespace hw
