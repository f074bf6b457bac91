#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hw/measure.hpp"
#include "hw/weights.hpp"
#include "test_util.hpp"

using hw::DiscreteMeasureSpace;
using hw::Direction;
using hw::Exponent;
using hw::StepFunction;
using hw::lp_weight;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Eigen::ArrayXd arr(std::initializer_list<double> xs) {
  Eigen::ArrayXd a(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) a[i++] = x;
  return a;
}

}  // namespace

TEST_CASE("space and function construction") {
  CHECK_THROWS_AS(DiscreteMeasureSpace(arr({0.0, 0.0})), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteMeasureSpace(arr({-1.0, 2.0})), std::invalid_argument);
  CHECK_NOTHROW(DiscreteMeasureSpace(arr({0.0, 3.0})));
  CHECK_NOTHROW(DiscreteMeasureSpace(arr({kInf})));
  CHECK_THROWS_AS(StepFunction(arr({std::nan("")})), std::invalid_argument);
  // signed values are absorbed at ingestion
  CHECK(StepFunction(arr({-3.0})).values()[0] == 3.0);
  CHECK(StepFunction(arr({-kInf})).values()[0] == kInf);
}

TEST_CASE("lp weight on the worked examples") {
  const DiscreteMeasureSpace counting(arr({1, 1}));
  CHECK(tu::rel_err(lp_weight(StepFunction(arr({3, 4})), counting, Exponent::finite(2)).value(),
                    5.0) < 1e-15);
  CHECK(lp_weight(StepFunction(arr({0, 5})), counting, Exponent::finite(-1)).value() == 0.0);
  CHECK(lp_weight(StepFunction(arr({kInf, kInf})), counting, Exponent::finite(-1)).is_infinite());
  CHECK(lp_weight(StepFunction(arr({5, 2})), DiscreteMeasureSpace(arr({0, 1})),
                  Exponent::plus_infinity())
            .value() == 2.0);
}

TEST_CASE("tri-case structure for negative exponents") {
  const DiscreteMeasureSpace sp(arr({1, 2}));
  // ordinary branch: 0 < I < inf
  const double w = lp_weight(StepFunction(arr({2, 4})), sp, Exponent::finite(-2)).value();
  CHECK(tu::rel_err(w, std::pow(1.0 / 4.0 + 2.0 / 16.0, -0.5)) < 1e-14);
  // I = inf via a zero value on positive mass
  CHECK(lp_weight(StepFunction(arr({0, 4})), sp, Exponent::finite(-2)).value() == 0.0);
  // I = 0 via infinite values on every positive-mass atom
  CHECK(lp_weight(StepFunction(arr({kInf, kInf})), sp, Exponent::finite(-2)).is_infinite());
  // infinite value under p < 0 contributes nothing
  const double w2 = lp_weight(StepFunction(arr({kInf, 4})), sp, Exponent::finite(-2)).value();
  CHECK(tu::rel_err(w2, std::pow(2.0 / 16.0, -0.5)) < 1e-14);
}

TEST_CASE("positive exponents and infinite mass") {
  const DiscreteMeasureSpace sp(arr({1, 1}));
  CHECK(lp_weight(StepFunction(arr({kInf, 1})), sp, Exponent::finite(2)).is_infinite());
  CHECK(lp_weight(StepFunction(arr({0, 0})), sp, Exponent::finite(2)).value() == 0.0);
  const DiscreteMeasureSpace heavy(arr({kInf, 1}));
  CHECK(lp_weight(StepFunction(arr({1, 1})), heavy, Exponent::finite(2)).is_infinite());
  CHECK(lp_weight(StepFunction(arr({1, 1})), heavy, Exponent::finite(-2)).value() == 0.0);
  // but an infinite mass under a vanishing contribution stays invisible
  CHECK(lp_weight(StepFunction(arr({0, 3})), heavy, Exponent::finite(2)).value() == 3.0);
}

TEST_CASE("essential supremum and infimum ignore null atoms") {
  const DiscreteMeasureSpace sp(arr({0, 1, 2}));
  const StepFunction f(arr({100, 5, 2}));
  CHECK(lp_weight(f, sp, Exponent::plus_infinity()).value() == 5.0);
  CHECK(lp_weight(f, sp, Exponent::minus_infinity()).value() == 2.0);
  const StepFunction fi(arr({kInf, 5, 2}));
  CHECK(lp_weight(fi, sp, Exponent::plus_infinity()).value() == 5.0);
}

TEST_CASE("unit masses reduce to the vector weight") {
  hw::SplitMix64 g{41};
  for (int rep = 0; rep < 2000; ++rep) {
    const Eigen::Index n = 1 + static_cast<Eigen::Index>(g.below(6));
    Eigen::ArrayXd vals(n);
    Eigen::VectorXcd vec(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double m = std::exp(g.uniform(std::log(1e-3), std::log(1e3)));
      vals[i] = m;
      vec[i] = m;
    }
    const Exponent p = (rep % 7 == 0) ? (rep % 14 == 0 ? Exponent::plus_infinity()
                                                       : Exponent::minus_infinity())
                                      : tu::random_exponent(g);
    const double lw = lp_weight(StepFunction(vals), DiscreteMeasureSpace(Eigen::ArrayXd::Ones(n)), p).value();
    const double hwv = hw::hoelder_weight(vec, p).value();
    CHECK(tu::rel_err(lw, hwv) < 1e-15);
  }
}

TEST_CASE("null-atom invariance is exact") {
  hw::SplitMix64 g{42};
  for (int rep = 0; rep < 200; ++rep) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(g.below(5));
    Eigen::ArrayXd masses(n);
    for (Eigen::Index i = 0; i < n; ++i)
      masses[i] = (g.next() & 1) ? 0.0 : std::exp(g.uniform(-3.0, 3.0));
    masses[0] = 1.0;  // keep total positive
    Eigen::ArrayXd vals(n);
    for (Eigen::Index i = 0; i < n; ++i) vals[i] = std::exp(g.uniform(-3.0, 3.0));
    Eigen::ArrayXd mutated = vals;
    bool any_null = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (masses[i] == 0.0) {
        mutated[i] = (g.next() & 1) ? 0.0 : kInf;  // the most aggressive changes
        any_null = true;
      }
    }
    if (!any_null) continue;
    const DiscreteMeasureSpace sp(masses);
    const Exponent p = tu::random_exponent(g);
    const double w1 = lp_weight(StepFunction(vals), sp, p).value();
    const double w2 = lp_weight(StepFunction(mutated), sp, p).value();
    CHECK(w1 == w2);  // bit-exact
  }
}

TEST_CASE("mass scaling law") {
  hw::SplitMix64 g{43};
  for (int rep = 0; rep < 300; ++rep) {
    const Eigen::Index n = 1 + static_cast<Eigen::Index>(g.below(6));
    Eigen::ArrayXd masses(n), vals(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      masses[i] = std::exp(g.uniform(-3.0, 3.0));
      vals[i] = std::exp(g.uniform(-3.0, 3.0));
    }
    const double lambda = std::exp(g.uniform(-2.0, 2.0));
    const Exponent p = tu::random_exponent(g);
    const double w = lp_weight(StepFunction(vals), DiscreteMeasureSpace(masses), p).value();
    const double ws =
        lp_weight(StepFunction(vals), DiscreteMeasureSpace((lambda * masses).eval()), p).value();
    CHECK(tu::rel_err(ws, std::pow(lambda, 1.0 / p.value()) * w) < 1e-12);
  }
}

TEST_CASE("reverse Hoelder on the worked examples") {
  const DiscreteMeasureSpace sp(arr({1, 1}));
  const StepFunction ones(arr({1, 1}));

  const auto rep1 = hw::check_reverse_hoelder(ones, ones, -2, 2.0 / 3.0, sp);
  CHECK(rep1.satisfied);
  CHECK(tu::rel_err(rep1.lhs.value(), 2.0) < 1e-14);
  CHECK(tu::rel_err(rep1.rhs.value(), 2.0) < 1e-13);

  // ||f||_r = 0 forces the right side to zero (inf * 0 = 0 included)
  const auto rep2 = hw::check_reverse_hoelder(StepFunction(arr({0, 1})), ones, -2, 2.0 / 3.0, sp);
  CHECK(rep2.rhs.value() == 0.0);
  CHECK(rep2.satisfied);

  // ||f||_r = inf comes with an infinite product side
  const auto rep3 =
      hw::check_reverse_hoelder(StepFunction(arr({kInf, kInf})), ones, -2, 2.0 / 3.0, sp);
  CHECK(rep3.lhs.is_infinite());
  CHECK(rep3.satisfied);

  CHECK_THROWS_AS(hw::check_reverse_hoelder(ones, ones, 2, 2, sp), std::invalid_argument);
  CHECK_THROWS_AS(hw::check_reverse_hoelder(ones, ones, -2, 0.5, sp), std::invalid_argument);
}

TEST_CASE("theorem-3 checks reduce to the vector check on unit masses") {
  const DiscreteMeasureSpace sp(arr({1, 1}));
  const auto triple = hw::ExponentTriple::conjugate(-2, 1);
  const auto m_rep = hw::check_theorem3(StepFunction(arr({1, 2})), StepFunction(arr({1, 1})),
                                        triple, sp);
  Eigen::VectorXcd v(2), x(2);
  v << 1, 2;
  x << 1, 1;
  const auto v_rep = hw::check_generalized_hoelder(v, x, triple);
  CHECK(m_rep.satisfied == v_rep.satisfied);
  CHECK(m_rep.lhs.value() == v_rep.lhs.value());
  CHECK(m_rep.rhs.value() == v_rep.rhs.value());

  const auto rep2 = hw::check_theorem3(StepFunction(arr({1, 1})), StepFunction(arr({1, 1})),
                                       hw::ExponentTriple::conjugate(2, 2),
                                       DiscreteMeasureSpace(arr({2, 3})));
  CHECK(tu::rel_err(rep2.lhs.value(), 5.0) < 1e-14);
  CHECK(tu::rel_err(rep2.rhs.value(), 5.0) < 1e-14);
  CHECK(rep2.satisfied);

  // vanishing value under t < 0: zero left side, trivially satisfied
  const auto rep3 = hw::check_theorem3(StepFunction(arr({0, 1})), StepFunction(arr({1, 1})),
                                       hw::ExponentTriple::conjugate(3, -2), sp);
  CHECK(rep3.lhs.value() == 0.0);
  CHECK(rep3.satisfied);
}

TEST_CASE("fuzz: measurable-function checks hold with zeros and infinities") {
  hw::SplitMix64 g{44};
  auto random_values = [&](Eigen::Index n) {
    Eigen::ArrayXd vals(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const std::uint64_t roll = g.below(20);
      if (roll == 0) {
        vals[i] = 0.0;
      } else if (roll == 1) {
        vals[i] = kInf;
      } else {
        vals[i] = std::exp(g.uniform(std::log(1e-3), std::log(1e3)));
      }
    }
    return vals;
  };
  int checked = 0;
  int violations = 0;
  while (checked < 10'000) {
    const Eigen::Index n = 1 + static_cast<Eigen::Index>(g.below(8));
    Eigen::ArrayXd masses(n);
    bool positive = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      masses[i] = (g.below(10) == 0) ? 0.0 : std::exp(g.uniform(-5.0, 5.0));
      positive |= masses[i] > 0.0;
    }
    if (!positive) continue;
    const DiscreteMeasureSpace sp(masses);
    const StepFunction f(random_values(n));
    const StepFunction h(random_values(n));

    const double r = tu::random_exponent_value(g);
    const double s = tu::random_exponent_value(g);
    try {
      const auto triple = hw::ExponentTriple::conjugate(r, s);
      if (!hw::check_theorem3(f, h, triple, sp).satisfied) ++violations;
      ++checked;
    } catch (const std::invalid_argument&) {
      continue;
    }

    // a reverse-Hoelder pair derived from a positive fraction
    const double srev = g.uniform(0.05, 0.95);
    const double rrev = 1.0 / (1.0 - 1.0 / srev);  // 1/r = 1 - 1/s < 0
    if (!hw::check_reverse_hoelder(f, h, rrev, srev, sp).satisfied) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("membership predicate") {
  const DiscreteMeasureSpace sp(arr({1, 1}));
  CHECK_FALSE(hw::in_Lp(StepFunction(arr({kInf, 1})), sp, Exponent::finite(2)));
  CHECK(hw::in_Lp(StepFunction(arr({3, 1})), sp, Exponent::finite(2)));
  CHECK(hw::in_Lp(StepFunction(arr({3, 1})), sp, Exponent::finite(-3)));
  CHECK_FALSE(hw::in_Lp(StepFunction(arr({kInf, 1})), sp, Exponent::finite(-3)));
  // a null atom may carry an infinite value without leaving the space
  CHECK(hw::in_Lp(StepFunction(arr({kInf, 1})), DiscreteMeasureSpace(arr({0, 1})),
                  Exponent::plus_infinity()));
}
