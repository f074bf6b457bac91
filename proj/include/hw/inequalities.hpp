#pragma once

#include <Eigen/Core>

#include "hw/exponent.hpp"
#include "hw/weight_value.hpp"

namespace hw {

/// Which way a conjugate triple points the inequality.
enum class Direction { TLess, TGreater };

/// A conjugate exponent triple: finite nonzero r, s, t with
/// 1/t = 1/r + 1/s. The reciprocal identity forces either t < r, s
/// (TLess) or t > r, s (TGreater).
class ExponentTriple {
 public:
  /// Builds the triple from r and s. Throws std::invalid_argument when
  /// |1/r + 1/s| < 1e-14 (t would be infinite, outside the hypothesis).
  static ExponentTriple conjugate(double r, double s);

  double r() const noexcept { return r_; }
  double s() const noexcept { return s_; }
  double t() const noexcept { return t_; }
  Direction direction() const noexcept { return direction_; }

 private:
  ExponentTriple(double r, double s, double t, Direction d)
      : r_(r), s_(s), t_(t), direction_(d) {}
  double r_, s_, t_;
  Direction direction_;
};

/// Outcome of one inequality check. slack is a signed relative margin:
/// positive when the favored side wins, 0 at equality, -1/+1 when an
/// infinite or vanishing side decides the comparison outright.
struct InequalityReport {
  WeightValue lhs;  // ||v.x||_t  (componentwise product)
  WeightValue rhs;  // ||v||_r * ||x||_s under the inf*0 = 0 convention
  Direction direction = Direction::TLess;
  bool satisfied = false;
  double slack = 0.0;
};

/// ||v.x||_t vs ||v||_r * ||x||_s with the direction taken from the triple.
InequalityReport check_generalized_hoelder(const Eigen::VectorXcd& v, const Eigen::VectorXcd& x,
                                           const ExponentTriple& triple);

namespace detail {
/// Satisfaction and slack shared with the measure-space checks.
InequalityReport make_report(double lhs, double rhs, Direction dir);
}  // namespace detail

}  // namespace hw
