#include "hw/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "hw/log_domain.hpp"
#include "hw/rng.hpp"

namespace hw {

namespace {

constexpr double kLogSampleLo = -13.815510557964274;  // log(1e-6)
constexpr double kLogSampleHi = 13.815510557964274;   // log(1e6)

/// log(||D x||_t / ||x||_s) from the log moduli of x. Phases are irrelevant
/// to every weight, so the search never leaves the nonnegative orthant.
class LogRatio {
 public:
  LogRatio(const DiagonalMap& d, Exponent s, Exponent t)
      : s_(s), t_(t), lv_(static_cast<std::size_t>(d.size())) {
    for (Eigen::Index i = 0; i < d.size(); ++i)
      lv_[static_cast<std::size_t>(i)] = std::log(std::abs(d.diagonal()[i]));
  }

  double operator()(std::span<const double> xi) {
    const std::size_t n = lv_.size();
    mapped_.resize(n);
    scratch_.resize(n);
    for (std::size_t i = 0; i < n; ++i) mapped_[i] = lv_[i] + xi[i];
    const double num = log_weight_from_logs(mapped_, t_, scratch_);
    const double den = log_weight_from_logs(xi, s_, scratch_);
    return num - den;
  }

  /// log ||x||_s, for normalizing witnesses.
  double log_source_weight(std::span<const double> xi) {
    scratch_.resize(lv_.size());
    return log_weight_from_logs(xi, s_, scratch_);
  }

 private:
  Exponent s_, t_;
  std::vector<double> lv_;
  std::vector<double> mapped_;
  std::vector<double> scratch_;
};

struct BestSample {
  double log_ratio = neg_log_inf;
  std::uint64_t index = 0;
  std::vector<double> xi;

  bool beats(const BestSample& other) const {
    if (log_ratio != other.log_ratio) return log_ratio > other.log_ratio;
    return index < other.index;
  }
};

BestSample scan_samples(const DiagonalMap& d, Exponent s, Exponent t, std::uint64_t seed,
                        std::uint64_t lo, std::uint64_t hi) {
  LogRatio ratio(d, s, t);
  const std::size_t n = static_cast<std::size_t>(d.size());
  std::vector<double> xi(n);
  BestSample best;
  bool have = false;
  for (std::uint64_t i = lo; i < hi; ++i) {
    SplitMix64 rng = substream(seed, i);
    for (std::size_t j = 0; j < n; ++j) xi[j] = rng.uniform(kLogSampleLo, kLogSampleHi);
    const double r = ratio(xi);
    if (!have || r > best.log_ratio) {
      best.log_ratio = r;
      best.index = i;
      best.xi = xi;
      have = true;
    }
  }
  return best;
}

}  // namespace

OracleEstimate oracle_operator_weight(const DiagonalMap& d, Exponent s, Exponent t,
                                      const SearchBudget& budget, int workers) {
  if (budget.samples == 0) throw std::invalid_argument("oracle: sample budget must be >= 1");
  if (budget.divergence_threshold <= 1.0)
    throw std::invalid_argument("oracle: divergence threshold must exceed 1");

  const std::size_t n = static_cast<std::size_t>(d.size());
  const std::uint64_t nw =
      std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(workers, 1)), 1,
                                std::min<std::uint64_t>(budget.samples, 64));

  // Sampling phase. The partition never changes the outcome: sample i is a
  // pure function of (seed, i) and the merge prefers higher ratio, then
  // lower index, exactly like the single-threaded scan.
  BestSample best;
  if (nw == 1) {
    best = scan_samples(d, s, t, budget.seed, 0, budget.samples);
  } else {
    std::vector<BestSample> partial(nw);
    std::vector<std::thread> pool;
    pool.reserve(nw);
    const std::uint64_t chunk = budget.samples / nw;
    const std::uint64_t rest = budget.samples % nw;
    std::uint64_t lo = 0;
    for (std::uint64_t w = 0; w < nw; ++w) {
      const std::uint64_t hi = lo + chunk + (w < rest ? 1 : 0);
      pool.emplace_back([&, w, lo, hi] { partial[w] = scan_samples(d, s, t, budget.seed, lo, hi); });
      lo = hi;
    }
    for (auto& th : pool) th.join();
    best = partial[0];
    for (std::uint64_t w = 1; w < nw; ++w)
      if (partial[w].beats(best)) best = partial[w];
  }

  LogRatio ratio(d, s, t);
  std::uint64_t evaluations = budget.samples;
  const double log_threshold = std::log(budget.divergence_threshold);
  bool diverging = best.log_ratio > log_threshold;

  // Refinement phase: coordinate-wise multiplicative pattern search, factor
  // annealed geometrically from 2 down to 1 + 1e-9. Runs in the log domain,
  // so coordinates may wander arbitrarily far without overflow.
  if (!diverging && budget.refinement_iterations > 0 && std::isfinite(best.log_ratio)) {
    const std::uint64_t iters = budget.refinement_iterations;
    double step = std::log(2.0);
    const double shrink =
        iters > 1 ? std::pow(std::log1p(1e-9) / std::log(2.0), 1.0 / static_cast<double>(iters - 1))
                  : 1.0;
    std::vector<double>& xi = best.xi;
    for (std::uint64_t it = 0; it < iters && !diverging; ++it) {
      for (std::size_t j = 0; j < n && !diverging; ++j) {
        for (double dir : {1.0, -1.0}) {
          for (int climb = 0; climb < 500; ++climb) {
            xi[j] += dir * step;
            const double r = ratio(xi);
            ++evaluations;
            if (r > best.log_ratio) {
              best.log_ratio = r;
              if (r > log_threshold) {
                diverging = true;
                break;
              }
            } else {
              xi[j] -= dir * step;
              break;
            }
          }
          if (diverging) break;
        }
      }
      step *= shrink;
    }
  }

  OracleEstimate est;
  est.seed = budget.seed;
  est.evaluations = evaluations;
  est.diverging = diverging;
  est.lower_bound =
      best.log_ratio == neg_log_inf ? WeightValue(0.0) : WeightValue(std::exp(best.log_ratio));
  const double lsw = ratio.log_source_weight(best.xi);
  Eigen::VectorXcd witness(d.size());
  for (Eigen::Index i = 0; i < d.size(); ++i)
    witness[i] = std::exp(best.xi[static_cast<std::size_t>(i)] - lsw);
  est.witness = std::move(witness);
  return est;
}

}  // namespace hw
