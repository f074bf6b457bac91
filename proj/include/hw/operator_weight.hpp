#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>

#include "hw/diagonal_map.hpp"
#include "hw/exponent.hpp"
#include "hw/weight_value.hpp"

namespace hw {

/// The five branches of the closed-form operator weight of a diagonal map
/// between Hoelder-weighted spaces.
enum class CaseLabel { A, B, C, D, E };

char case_letter(CaseLabel c);

/// Total classification of (s, t, v). Precedence: B (zero map, then
/// t < 0 with a vanishing product, then s = +inf), then A (s < 0 < t),
/// then E (t = -inf), then C/D by comparing s and t.
CaseLabel classify(Exponent s, Exponent t, const DiagonalMap& d);

/// The exponent s*t/(s-t) driving cases C and E.
inline double case_c_exponent(double s, double t) { return s * t / (s - t); }

/// Closed-form operator weight ||D||_{s,t} = sup { ||Dx||_t : ||x||_s = 1 }.
WeightValue operator_weight(Exponent s, Exponent t, const DiagonalMap& d);

/// A vector attaining the operator weight, or a unit-weight sequence
/// approaching it (diverging when the weight is infinite), or Vacuous for
/// the zero map.
///
/// Sequence generators are stateless in k and defined for every k >= k_min.
/// The index is internally rescaled per configuration so that the emitted
/// vectors close most of the gap to the supremum by k ~ 1e6; the vectors
/// remain exactly unit in ||.||_s for every k.
struct Extremizer {
  enum class Kind { Attained, Sequence, Vacuous };
  Kind kind = Kind::Vacuous;
  Eigen::VectorXcd vector;                                   // Attained only
  std::function<Eigen::VectorXcd(std::uint64_t)> at;         // Sequence only
  std::uint64_t k_min = 1;
  bool divergent = false;
};

Extremizer extremizer(Exponent s, Exponent t, const DiagonalMap& d);

/// Checks ||D||_{s,t} == ||D||_{-t,-s} (finite nonzero s, t, no zero diagonal
/// entry) within 1e-12 relative, with matching case labels.
bool dual_check(double s, double t, const DiagonalMap& d);

}  // namespace hw
