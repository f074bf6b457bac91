#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "hw/operator_weight.hpp"
#include "hw/oracle.hpp"

namespace hw {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

double log_sum_exp2(double a, double b) {
  if (a < b) std::swap(a, b);
  if (a == -kInf) return -kInf;
  if (std::isinf(a)) return a;
  return a + std::log1p(std::exp(b - a));
}

/// G on the unit s-sphere of the normalized map diag(b, 1), parameterized by
/// w = |x_1|^s in (0, 1): G = (b^t w^(t/s) + (1-w)^(t/s))^(1/t). Both logs of
/// w and 1-w are supplied so near-boundary points keep full precision.
struct SliceObjective {
  double log_b;
  double s, t;

  double log_value(double log_w, double log_1mw) const {
    const double e = t / s;
    const double term_head = t * log_b + e * log_w;
    const double term_rest = e * log_1mw;
    return log_sum_exp2(term_head, term_rest) / t;
  }
  double value_at(double w) const { return std::exp(log_value(std::log(w), std::log1p(-w))); }
};

/// Golden-section maximization on [a, b], returning the best value seen.
template <typename F>
double golden_max(const F& f, double a, double b, int iterations = 160) {
  const double inv_phi = 0.6180339887498949;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  double best = std::fmax(fc, fd);
  for (int i = 0; i < iterations && c < d; ++i) {
    if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      best = std::fmax(best, fd);
    } else {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      best = std::fmax(best, fc);
    }
  }
  return best;
}

}  // namespace

ExactN2Detail exact_n2_detail(const DiagonalMap& d, double s, double t) {
  if (d.size() != 2) throw std::invalid_argument("exact_n2: needs n = 2");
  Exponent::finite(s);
  Exponent::finite(t);

  ExactN2Detail out;
  out.critical_value = kNaN;
  out.critical_w = kNaN;

  const double a0 = std::abs(d.diagonal()[0]);
  const double a1 = std::abs(d.diagonal()[1]);
  const double vmax = std::fmax(a0, a1);
  const double vmin = std::fmin(a0, a1);

  if (vmax == 0.0) {  // zero map
    out.value = WeightValue(0.0);
    out.candidate_max = 0.0;
    out.grid_max = 0.0;
    return out;
  }
  if (s < 0.0 && t > 0.0) {  // unbounded: the sphere reaches arbitrarily large entries
    out.value = WeightValue::infinity();
    out.candidate_max = kInf;
    out.grid_max = kInf;
    return out;
  }
  if (vmin == 0.0 && t < 0.0) {  // a vanishing entry kills every ||Dx||_t
    out.value = WeightValue(0.0);
    out.candidate_max = 0.0;
    out.grid_max = 0.0;
    return out;
  }

  const double b = vmin / vmax;
  const SliceObjective g{std::log(b), s, t};
  const bool same_sign = (s > 0.0) == (t > 0.0);
  const double limit_w0 = same_sign ? 1.0 : 0.0;
  const double limit_w1 = same_sign ? b : 0.0;

  double candidate_max = std::fmax(limit_w0, limit_w1);
  if (s != t) {
    const double u = case_c_exponent(s, t);
    const double ulb = u * g.log_b;
    // (1 + b^u)^(1/u), factored so the inner exponential never overflows.
    const double crit = ulb <= 0.0 ? std::exp(std::log1p(std::exp(ulb)) / u)
                                   : b * std::exp(std::log1p(std::exp(-ulb)) / u);
    out.critical_value = crit;
    out.critical_w = 1.0 / (1.0 + std::exp(-ulb));
    candidate_max = std::fmax(candidate_max, crit);
  }
  out.candidate_max = candidate_max;

  // Independent sweep of the slice: a dense uniform grid, log-spaced points
  // into both boundary layers, then a golden-section polish around the best
  // cell. A feasible point beating the closed candidates means the formula
  // is wrong, not the search.
  constexpr int kGrid = 100'000;
  constexpr int kEdge = 200;
  std::vector<double> ws;
  ws.reserve(kGrid + 2 * kEdge);
  for (int i = kEdge; i >= 1; --i) {
    const double x = 11.5 + (745.0 - 11.5) * static_cast<double>(i) / kEdge;
    ws.push_back(std::exp(-x));
  }
  for (int i = 1; i < kGrid; ++i) ws.push_back(static_cast<double>(i) / kGrid);
  for (int i = 1; i <= kEdge; ++i) {
    const double x = 11.5 + (36.0 - 11.5) * static_cast<double>(i) / kEdge;
    ws.push_back(-std::expm1(-x));  // 1 - exp(-x), still below 1
  }

  double grid_max = -kInf;
  std::size_t best_i = 0;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const double w = ws[i];
    const double gv = std::exp(g.log_value(std::log(w), std::log1p(-w)));
    if (gv > grid_max) {
      grid_max = gv;
      best_i = i;
    }
  }
  const double lo = best_i == 0 ? ws[0] * 0.5 : ws[best_i - 1];
  const double hi = best_i + 1 == ws.size() ? 0.5 * (ws[best_i] + 1.0) : ws[best_i + 1];
  grid_max = std::fmax(grid_max, golden_max([&](double w) { return g.value_at(w); }, lo, hi));
  out.grid_max = grid_max;

  if (grid_max > candidate_max * (1.0 + 1e-9) + 1e-300)
    throw DefectError("exact_n2: grid search beat the closed-form candidates");

  out.value = WeightValue(vmax * candidate_max);
  return out;
}

WeightValue exact_n2(const DiagonalMap& d, double s, double t) {
  return exact_n2_detail(d, s, t).value;
}

}  // namespace hw
