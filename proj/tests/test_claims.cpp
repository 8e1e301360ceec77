#include <gtest/gtest.h>

#include <cmath>

#include "erdos/claims.hpp"
#include "oracle.hpp"

using namespace erdos;

namespace {

BoundParams params(std::uint64_t n, std::uint64_t k, double eps = 0.0, double c = 1.0) {
  return BoundParams{n, k, eps, c};
}

bool has_violation(const ClaimVerdict& v, const RationalVector& x, const RationalVector& y) {
  for (const auto& w : v.violations)
    if (w.vectors.size() == 2 && w.vectors[0] == x && w.vectors[1] == y) return true;
  return false;
}

RationalVector ints(std::initializer_list<long long> v) { return RationalVector::from_integers(v); }

}  // namespace

TEST(BoundFormulas, UnitDistance) {
  EXPECT_NEAR(unit_distance_bound(params(100, 2)), 50 * std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(unit_distance_bound(params(4, 4)), 4.0, 1e-12);
  EXPECT_NEAR(unit_distance_bound(params(100, 2, 0.2)), 28.150427993736740, 1e-9);
}

TEST(BoundFormulas, DistinctDistance) {
  EXPECT_NEAR(distinct_distance_bound(params(100, 2)), 70.71067811865476, 1e-10);
  EXPECT_NEAR(distinct_distance_bound(params(16, 4)), 4.0, 1e-12);
  EXPECT_NEAR(distinct_distance_bound(params(9, 2)), 6.3639610306789285, 1e-12);
}

TEST(BoundFormulas, Corollaries) {
  EXPECT_NEAR(corollary_bound(4, "dim_n", 0), 2.0, 1e-12);
  EXPECT_NEAR(corollary_bound(2, "dim_2n", 0), std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(corollary_bound(2, "dim_n_squared", 0), std::sqrt(2.0), 1e-12);
  try {
    corollary_bound(3, "dim_3n", 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownVariant);
  }
}

TEST(BoundFormulas, ParameterValidation) {
  EXPECT_THROW(unit_distance_bound(params(1, 2)), Error);
  EXPECT_THROW(unit_distance_bound(params(5, 1)), Error);
  EXPECT_THROW(distinct_distance_bound(params(5, 2, -0.1)), Error);
  EXPECT_THROW(distinct_distance_bound(params(5, 2, 0, 0)), Error);
}

TEST(BoundFormulas, Monotone) {
  for (std::uint64_t k = 2; k <= 6; ++k) {
    for (double eps : {0.0, 0.1, 0.3}) {
      for (std::uint64_t n = 2; n < 500; n += 7) {
        EXPECT_LT(unit_distance_bound(params(n, k, eps)), unit_distance_bound(params(n + 7, k, eps)));
        if (eps < 2.0 / static_cast<double>(k)) {
          EXPECT_LT(distinct_distance_bound(params(n, k, eps)), distinct_distance_bound(params(n + 7, k, eps)));
        }
        EXPECT_GT(unit_distance_bound(params(n, k, eps)), unit_distance_bound(params(n, k, eps + 0.05)));
        EXPECT_GT(distinct_distance_bound(params(n, k, eps)), distinct_distance_bound(params(n, k, eps + 0.05)));
      }
    }
  }
}

TEST(Transference, FindsKnownCounterexample) {
  const ClaimVerdict v = transference_search(3, 3, false);
  EXPECT_FALSE(v.asserted);
  EXPECT_EQ(v.checked_count, 27u * 27u);
  EXPECT_EQ(v.violation_count, 6u);  // enumerated independently with exact fractions
  ASSERT_TRUE(has_violation(v, ints({1, 1, 3}), ints({2, 2, 2})));
  EXPECT_EQ(v.violations.front().vectors[0], ints({1, 1, 3}));
  EXPECT_EQ(v.violations.front().vectors[1], ints({2, 2, 2}));
  EXPECT_EQ(v.violations.front().values.at("gap_sq_x"), Rational(64, 9));
  EXPECT_EQ(v.violations.front().values.at("gap_sq_y"), Rational(27, 4));
  for (const auto& w : v.violations) EXPECT_TRUE(reverify(v, w));
}

TEST(Transference, CleanDomains) {
  EXPECT_EQ(transference_search(2, 2, false).violation_count, 0u);
  EXPECT_EQ(transference_search(1, 4, false).violation_count, 0u);
  EXPECT_EQ(transference_search(1, 2, false).checked_count, 1u);
}

TEST(Transference, BudgetAndArguments) {
  try {
    transference_search(30, 4, false);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
  EXPECT_THROW(transference_search(3, 1, false), Error);
  EXPECT_THROW(transference_search(0, 3, false), Error);
}

TEST(Transference, CapKeepsFirstWitnessesAndFullCount) {
  const ClaimVerdict full = transference_search(4, 3, false, 1, 100000);
  const ClaimVerdict capped = transference_search(4, 3, false, 1, 5);
  ASSERT_GT(full.violation_count, 5u);
  EXPECT_EQ(capped.violation_count, full.violation_count);
  ASSERT_EQ(capped.violations.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(capped.violations[i], full.violations[i]);
}

TEST(Transference, ParallelEqualsSerial) {
  const ClaimVerdict one = transference_search(4, 3, false, 1, 50);
  for (unsigned w : {2u, 5u}) EXPECT_EQ(transference_search(4, 3, false, w, 50), one);
}

TEST(Transference, DistinctRestrictionReportsWithoutAsserting) {
  const ClaimVerdict v = transference_search(5, 3, true);
  EXPECT_EQ(v.checked_count, 60u * 60u);
  EXPECT_FALSE(v.asserted);
  for (const auto& w : v.violations) EXPECT_TRUE(reverify(v, w));
}

TEST(Reverify, RejectsForgedWitness) {
  ClaimVerdict v = transference_search(2, 2, false);
  const Witness forged{"norm_less_gap_not_less", {ints({1, 1}), ints({2, 2})}, 1, {}};
  EXPECT_FALSE(reverify(v, forged));
  ClaimVerdict ineq;
  ineq.claim_id = "inequalities";
  EXPECT_FALSE(reverify(ineq, Witness{"mass_upper", {ints({1, 2, 5})}, 1, {}}));
  ClaimVerdict h;
  h.claim_id = "harmonic";
  EXPECT_FALSE(reverify(h, Witness{"harmonic", {}, 1, {{"x", Rational(10)}}}));
}

TEST(InequalitySweep, DomainCount) {
  const ClaimVerdict v = inequality_sweep(3, 2, {Rational(1)});
  EXPECT_EQ(v.checked_count, 3u);
  EXPECT_EQ(v.violation_count, 0u);
}

TEST(InequalitySweep, FullDomainHasNoViolations) {
  const ClaimVerdict v = inequality_sweep(12, 5, {Rational(1), Rational(2), Rational(3)});
  // (C(12,2) + C(12,3) + C(12,4) + C(12,5)) * 3 scales
  EXPECT_EQ(v.checked_count, (66u + 220u + 495u + 792u) * 3u);
  EXPECT_EQ(v.violation_count, 0u);
  EXPECT_TRUE(v.asserted);
}

TEST(InequalitySweep, ParallelEqualsSerial) {
  const auto scales = std::vector<Rational>{Rational(1), Rational(5, 2)};
  EXPECT_EQ(inequality_sweep(9, 4, scales, 3), inequality_sweep(9, 4, scales, 1));
}

TEST(IdentitySweep, NoViolations) {
  const ClaimVerdict v = identity_sweep(8, {2, 3, 4}, {Rational(1), Rational(2), Rational(3)});
  EXPECT_EQ(v.checked_count, (64u + 512u + 4096u) * 3u);
  EXPECT_EQ(v.violation_count, 0u);
}

TEST(Involution, SeededCheck) {
  const ClaimVerdict v = involution_check(200, 42);
  EXPECT_EQ(v.checked_count, 200u);
  EXPECT_EQ(v.violation_count, 0u);
}

TEST(Harmonic, SmallSweep) {
  const ClaimVerdict v = harmonic_check(2000);
  EXPECT_EQ(v.checked_count, 2000u);
  EXPECT_EQ(v.violation_count, 0u);
}

TEST(BoundReport, TinyGrids) {
  std::vector<PointSetDescriptor> sweep(2);
  sweep[0].side = 2;
  sweep[1].side = 3;
  const BoundReport r = bound_report(sweep, params(2, 2));
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(r.rows[0].measured_distinct, 2u);
  EXPECT_EQ(r.rows[1].measured_distinct, 5u);
  EXPECT_EQ(r.rows[1].measured_unit_pairs, 12u);
  EXPECT_EQ(r.rows[1].measured_bipartite_distinct, 6u);
  EXPECT_NEAR(r.rows[0].bound_distinct, 2 * std::sqrt(2.0), 1e-10);
  EXPECT_NEAR(r.rows[1].bound_distinct, 6.3639610306789285, 1e-10);
  EXPECT_LT(r.rows[0].ratio_distinct, 1.0);
  EXPECT_LT(r.rows[1].ratio_distinct, 1.0);
}

TEST(BoundReport, RatiosRecomputeFromFields) {
  std::vector<PointSetDescriptor> sweep;
  for (std::uint64_t n : {10u, 20u, 40u}) {
    PointSetDescriptor d;
    d.kind = ConfigKind::Random;
    d.n = n;
    d.coord_bound = 6;
    d.seed = 3;
    sweep.push_back(d);
  }
  const BoundReport r = bound_report(sweep, params(2, 2, 0.1, 0.5));
  for (const auto& row : r.rows) {
    EXPECT_NEAR(row.ratio_distinct, static_cast<double>(row.measured_distinct) / row.bound_distinct,
                1e-9 * row.ratio_distinct);
    EXPECT_NEAR(row.ratio_unit, static_cast<double>(row.measured_unit_pairs) / row.bound_unit,
                1e-9 * std::max(row.ratio_unit, 1e-300));
  }
}

TEST(BoundReport, ConstantScalingKeepsRatioOrder) {
  std::vector<PointSetDescriptor> sweep;
  for (std::uint64_t side : {3u, 5u, 6u, 9u}) {
    PointSetDescriptor d;
    d.side = side;
    sweep.push_back(d);
  }
  const BoundReport a = bound_report(sweep, params(2, 2, 0.1, 1.0));
  const BoundReport b = bound_report(sweep, params(2, 2, 0.1, 7.5));
  auto argmax = [](const BoundReport& r) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < r.rows.size(); ++i)
      if (r.rows[i].ratio_distinct > r.rows[best].ratio_distinct) best = i;
    return best;
  };
  EXPECT_EQ(argmax(a), argmax(b));
  for (std::size_t i = 0; i < a.rows.size(); ++i)
    EXPECT_NEAR(b.rows[i].bound_distinct, 7.5 * a.rows[i].bound_distinct, 1e-9 * b.rows[i].bound_distinct);
}

TEST(BoundReport, EmptySweepIsAnError) {
  try {
    bound_report({}, params(2, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyInput);
  }
}

TEST(BoundReport, TrendFlag) {
  std::vector<ReportRow> rows(3);
  rows[0].n = 4;
  rows[0].ratio_distinct = 0.5;
  rows[1].n = 16;
  rows[1].ratio_distinct = 0.7;
  rows[2].n = 9;
  rows[2].ratio_distinct = 0.6;
  EXPECT_TRUE(ratios_non_decreasing(rows));
  rows[2].ratio_distinct = 0.8;
  EXPECT_FALSE(ratios_non_decreasing(rows));
  rows[2].ratio_distinct = 0.6;
  rows[0].ratio_distinct = 0;
  EXPECT_FALSE(ratios_non_decreasing(rows));
}
