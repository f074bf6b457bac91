#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <stdexcept>

#include "hw/diagonal_map.hpp"
#include "hw/exponent.hpp"
#include "hw/weight_value.hpp"

namespace hw {

/// Thrown when an internal cross-check finds the closed form beaten by a
/// direct search, i.e. a formula defect rather than a user error.
class DefectError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct SearchBudget {
  std::uint64_t samples = 10'000;
  std::uint64_t refinement_iterations = 200;
  double divergence_threshold = 1e9;
  std::uint64_t seed = 0;
};

struct OracleEstimate {
  WeightValue lower_bound;
  Eigen::VectorXcd witness;  // unit ||.||_s, achieves lower_bound
  bool diverging = false;
  std::uint64_t evaluations = 0;
  std::uint64_t seed = 0;
};

/// Brute-force lower bound on sup { ||Dx||_t / ||x||_s }: log-uniform
/// sampling of entry moduli in [1e-6, 1e6] followed by coordinate-wise
/// multiplicative pattern refinement with an annealed step (2 down to
/// 1 + 1e-9). Deterministic for a fixed seed; `workers` only splits the
/// sampling range and never changes the result.
OracleEstimate oracle_operator_weight(const DiagonalMap& d, Exponent s, Exponent t,
                                      const SearchBudget& budget, int workers = 1);

/// Exact one-dimensional search for n = 2 and finite nonzero s, t.
///
/// Normalizes by the larger modulus (b = v_min/v_max), parameterizes the
/// unit s-sphere by w = |x_1|^s in (0, 1), and takes the maximum of the
/// boundary limits and the interior critical value. A 1e5-point grid plus
/// golden-section polish double-checks that no feasible point beats the
/// closed candidates; a violation throws DefectError.
WeightValue exact_n2(const DiagonalMap& d, double s, double t);

struct ExactN2Detail {
  WeightValue value;      // |v_max| * max(candidates)
  double candidate_max;   // on the normalized map (b, 1)
  double grid_max;        // best feasible value the search found, normalized
  double critical_value;  // value at the interior critical point; NaN if none
  double critical_w;      // location of the critical point in (0, 1); NaN if none
};

ExactN2Detail exact_n2_detail(const DiagonalMap& d, double s, double t);

}  // namespace hw
