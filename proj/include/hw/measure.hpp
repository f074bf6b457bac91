#pragma once

#include <Eigen/Core>

#include "hw/exponent.hpp"
#include "hw/inequalities.hpp"
#include "hw/weight_value.hpp"

namespace hw {

/// A finite measure space: atoms with masses in [0, inf], total mass > 0.
/// Atoms of zero mass are legal and invisible to every weight.
class DiscreteMeasureSpace {
 public:
  explicit DiscreteMeasureSpace(Eigen::ArrayXd masses);
  const Eigen::ArrayXd& masses() const noexcept { return masses_; }
  Eigen::Index size() const noexcept { return masses_.size(); }

 private:
  Eigen::ArrayXd masses_;
};

/// |f| on the atoms of a space: extended nonnegative values in [0, inf].
/// Signed or negative inputs are absorbed at ingestion (only |f| matters).
class StepFunction {
 public:
  explicit StepFunction(Eigen::ArrayXd values);
  const Eigen::ArrayXd& values() const noexcept { return values_; }
  Eigen::Index size() const noexcept { return values_.size(); }

 private:
  Eigen::ArrayXd values_;
};

/// ||f||_p on a discrete measure space with I = sum_i mu_i |f_i|^p under the
/// conventions inf*0 = 0 and 1/0 = inf.
///
/// p > 0: I^(1/p) (inf stays inf). p < 0: I^(1/p) for I in (0, inf),
/// 0 for I = inf, inf for I = 0. p = +inf: essential supremum. p = -inf:
/// essential infimum (symmetric companion, an extension).
WeightValue lp_weight(const StepFunction& f, const DiscreteMeasureSpace& space, Exponent p);

/// Membership predicate: finite p > 0 asks for a finite integral of |f|^p;
/// every p < 0 and p = +-inf asks for a finite essential supremum.
bool in_Lp(const StepFunction& f, const DiscreteMeasureSpace& space, Exponent p);

/// Reverse Hoelder: ||f.g||_1 >= ||f||_r * ||g||_s for 1 = 1/r + 1/s with
/// r, s < 1 (hence of opposite signs).
InequalityReport check_reverse_hoelder(const StepFunction& f, const StepFunction& g, double r,
                                       double s, const DiscreteMeasureSpace& space);

/// ||f.g||_t vs ||f||_r * ||g||_s with the direction from the triple.
InequalityReport check_theorem3(const StepFunction& f, const StepFunction& g,
                                const ExponentTriple& triple, const DiscreteMeasureSpace& space);

}  // namespace hw
