#pragma once

#include <Eigen/Core>
#include <complex>
#include <stdexcept>

namespace hw {

/// The diagonal linear map D = diag(v_1, ..., v_n) on C^n, n >= 2.
/// Caches the structural flags the case analysis needs.
class DiagonalMap {
 public:
  explicit DiagonalMap(Eigen::VectorXcd v) : v_(std::move(v)) {
    if (v_.size() < 2) throw std::invalid_argument("DiagonalMap: need n >= 2");
    is_zero_ = true;
    has_zero_entry_ = false;
    max_index_ = 0;
    double max_mod = -1.0;
    for (Eigen::Index i = 0; i < v_.size(); ++i) {
      const double m = std::abs(v_[i]);
      if (m != 0.0) is_zero_ = false;
      if (m == 0.0) has_zero_entry_ = true;
      if (m > max_mod) {  // strict: ties keep the smallest index
        max_mod = m;
        max_index_ = i;
      }
    }
    max_modulus_ = max_mod;
  }

  const Eigen::VectorXcd& diagonal() const noexcept { return v_; }
  Eigen::Index size() const noexcept { return v_.size(); }
  bool is_zero() const noexcept { return is_zero_; }
  bool has_zero_entry() const noexcept { return has_zero_entry_; }
  Eigen::Index max_index() const noexcept { return max_index_; }
  double max_modulus() const noexcept { return max_modulus_; }

  Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const {
    if (x.size() != v_.size()) throw std::invalid_argument("DiagonalMap: size mismatch");
    return v_.cwiseProduct(x);
  }

 private:
  Eigen::VectorXcd v_;
  bool is_zero_;
  bool has_zero_entry_;
  Eigen::Index max_index_;
  double max_modulus_;
};

}  // namespace hw
