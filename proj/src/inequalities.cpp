#include "hw/inequalities.hpp"

#include <cmath>
#include <stdexcept>

#include "hw/extended.hpp"
#include "hw/weights.hpp"

namespace hw {

namespace {
constexpr double kRelTol = 1e-12;
constexpr double kAbsFloor = 1e-300;
}  // namespace

ExponentTriple ExponentTriple::conjugate(double r, double s) {
  Exponent::finite(r);  // validates finite nonzero
  Exponent::finite(s);
  const double inv = 1.0 / r + 1.0 / s;
  if (std::fabs(inv) < 1e-14)
    throw std::invalid_argument("conjugate exponent undefined: 1/r + 1/s = 0");
  const double t = 1.0 / inv;
  const bool t_less = t < r && t < s;
  const bool t_greater = t > r && t > s;
  if (t_less == t_greater) throw std::logic_error("conjugate triple lost its ordering");
  // Sanity: when t sits strictly outside [min(0,r,s), max(0,r,s)], r and s
  // must have opposite signs.
  if ((t < 0 && t_less) || (t > 0 && t_greater)) {
    if (!(r * s < 0)) throw std::logic_error("conjugate triple sign structure violated");
  }
  return ExponentTriple(r, s, t, t_less ? Direction::TLess : Direction::TGreater);
}

namespace detail {

InequalityReport make_report(double lhs, double rhs, Direction dir) {
  InequalityReport rep;
  rep.lhs = WeightValue(lhs);
  rep.rhs = WeightValue(rhs);
  rep.direction = dir;
  if (dir == Direction::TLess) {
    rep.satisfied = lhs <= rhs * (1.0 + kRelTol) + kAbsFloor;
  } else {
    rep.satisfied = lhs >= rhs * (1.0 - kRelTol) - kAbsFloor;
  }
  const double hi = dir == Direction::TLess ? rhs : lhs;  // favored side
  const double lo = dir == Direction::TLess ? lhs : rhs;
  if (lhs == rhs) {
    rep.slack = 0.0;
  } else if (std::isinf(hi)) {
    rep.slack = 1.0;
  } else if (std::isinf(lo)) {
    rep.slack = -1.0;
  } else {
    rep.slack = (hi - lo) / std::fmax(std::fmax(lhs, rhs), kAbsFloor);
  }
  return rep;
}

}  // namespace detail

InequalityReport check_generalized_hoelder(const Eigen::VectorXcd& v, const Eigen::VectorXcd& x,
                                           const ExponentTriple& triple) {
  if (v.size() != x.size())
    throw std::invalid_argument("check_generalized_hoelder: length mismatch");
  const Eigen::VectorXcd product = v.cwiseProduct(x);
  const double lhs = hoelder_weight(product, Exponent::finite(triple.t())).value();
  const double wr = hoelder_weight(v, Exponent::finite(triple.r())).value();
  const double ws = hoelder_weight(x, Exponent::finite(triple.s())).value();
  return detail::make_report(lhs, xr::mul(wr, ws), triple.direction());
}

}  // namespace hw
