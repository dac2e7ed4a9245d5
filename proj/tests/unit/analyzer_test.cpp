#include <gtest/gtest.h>

#include "ordisc/analyzer.hpp"
#include "ordisc/exprparse.hpp"
#include "ordisc/resultant.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace ordisc;

namespace {

const Field Q = Field::rationals();

MonicInY F(const std::string& s, const Field& f = Q) {
  return MonicInY::from_poly(parse_poly(s, f, 1));
}

UniPoly Yp(const std::string& s, const Field& f = Q) {
  return parse_poly(s, VariableNames{{"Y"}}, f).to_univariate();
}

PointAffine at(const Field& f, long x) { return PointAffine{{f.from_int(x)}}; }

}  // namespace

TEST(Fiber, Classes) {
  const FiberDecomposition a = fiber_at(F("Y^3 - Y^2 + X1"), at(Q, 0));
  EXPECT_EQ(a.r, 2u);
  ASSERT_EQ(a.classes.size(), 2u);
  EXPECT_EQ(a.classes[0].factor, Yp("Y - 1"));
  EXPECT_EQ(a.classes[0].multiplicity, 1u);
  EXPECT_EQ(a.classes[1].factor, Yp("Y"));
  EXPECT_EQ(a.classes[1].multiplicity, 2u);

  const FiberDecomposition b = fiber_at(F("Y^2 - X1"), at(Q, 0));
  EXPECT_EQ(b.r, 1u);
  ASSERT_EQ(b.classes.size(), 1u);
  EXPECT_EQ(b.classes[0].multiplicity, 2u);
}

TEST(Fiber, ExplicitRootsOverF5) {
  const Field f5 = Field::prime(5);
  const FiberDecomposition a = fiber_at(F("Y^2 - X1", f5), at(f5, 1), 1);
  EXPECT_EQ(a.r, 2u);
  ASSERT_TRUE(a.roots.has_value());
  std::vector<Element> values;
  for (const auto& r : *a.roots) values.push_back(r.value);
  ASSERT_EQ(values.size(), 2u);
  EXPECT_TRUE((values[0] == f5.from_int(1) && values[1] == f5.from_int(4)) ||
              (values[0] == f5.from_int(4) && values[1] == f5.from_int(1)));
}

TEST(ConditionI, GcdExamples) {
  EXPECT_TRUE(condition_i_via_gcd(F("Y^2 - X1"), at(Q, 0), Yp("Y")));
  EXPECT_FALSE(condition_i_via_gcd(F("Y^2 - X1^2"), at(Q, 0), Yp("Y")));
  const Field f2 = Field::prime(2);
  EXPECT_TRUE(condition_i_via_gcd(F("Y^2 + X1*Y + X1", f2), at(f2, 0), Yp("Y", f2)));
  // Irrational roots: Y^2 - 2 at X1 = 0 in Y^2 - 2 - X1^2 are simple points.
  EXPECT_TRUE(condition_i_via_gcd(F("Y^2 - 2 - X1^2"), at(Q, 0), Yp("Y^2 - 2")));
  // (Y^2 - 2)^2 - X1^2 is singular along both roots of Y^2 - 2 at X1 = 0.
  EXPECT_FALSE(condition_i_via_gcd(F("(Y^2 - 2)^2 - X1^2"), at(Q, 0), Yp("Y^2 - 2")));
}

TEST(Analyze, Examples) {
  const PointReport a = analyze_point(F("Y^2 - X1"), at(Q, 0));
  EXPECT_EQ(a.ord_p_d, 1u);
  EXPECT_EQ(a.r, 1u);
  EXPECT_TRUE(a.equality_observed);
  EXPECT_TRUE(a.cond_i);
  EXPECT_TRUE(a.cond_ii);
  EXPECT_TRUE(a.consistent);

  const PointReport b = analyze_point(F("Y^2 - X1^2"), at(Q, 0));
  EXPECT_EQ(b.ord_p_d, 2u);
  EXPECT_EQ(b.lower_bound, 1u);
  EXPECT_FALSE(b.cond_i);
  EXPECT_FALSE(b.equality_observed);
  EXPECT_TRUE(b.consistent);

  const Field f2 = Field::prime(2);
  const PointReport c = analyze_point(F("Y^2 + X1*Y + X1", f2), at(f2, 0));
  EXPECT_EQ(c.ord_p_d, 2u);
  EXPECT_EQ(c.r, 1u);
  EXPECT_TRUE(c.cond_i);
  EXPECT_FALSE(c.cond_ii);
  EXPECT_FALSE(c.equality_predicted);
  EXPECT_TRUE(c.consistent);
  EXPECT_NO_THROW(assert_point_report(c));
}

TEST(Analyze, RefusesZeroDiscriminant) {
  EXPECT_THROW(analyze_point(F("(Y - X1)^2"), at(Q, 0)), DiscriminantIdenticallyZero);
}

TEST(Analyze, QuotientPointSplitsIntoRoots) {
  // alg(t^2 - t, t) stands for both X1 = 0 and X1 = 1.
  const auto pieces = analyze_point_split(F("Y^2 - X1"), parse_point("alg(t^2 - t, t)", Q));
  ASSERT_EQ(pieces.size(), 2u);
  std::vector<unsigned> orders;
  for (const auto& [ring, rep] : pieces) {
    EXPECT_TRUE(rep.consistent);
    EXPECT_TRUE(rep.inequality_holds);
    orders.push_back(rep.ord_p_d);
  }
  std::sort(orders.begin(), orders.end());
  EXPECT_EQ(orders, (std::vector<unsigned>{0, 1}));
}

TEST(Analyze, IrreducibleQuotientPointStaysWhole) {
  // X1 = sqrt 2 on Y^2 - X1^2 + 2: fiber Y^2 over a simple point.
  const auto pieces = analyze_point_split(F("Y^2 - X1^2 + 2"), parse_point("alg(t^2 - 2, t)", Q));
  ASSERT_EQ(pieces.size(), 1u);
  EXPECT_EQ(pieces[0].second.r, 1u);
  EXPECT_EQ(pieces[0].second.ord_p_d, 1u);
  EXPECT_TRUE(pieces[0].second.consistent);
}

TEST(Corollaries, LowOrderAndMultiplicityBound) {
  const PointReport ord0 = analyze_point(F("Y^2 - X1"), at(Q, 1));
  EXPECT_EQ(ord0.ord_p_d, 0u);
  EXPECT_EQ(ord0.r, 2u);
  EXPECT_TRUE(low_order_check(ord0));
  const PointReport ord1 = analyze_point(F("Y^2 - X1"), at(Q, 0));
  EXPECT_TRUE(low_order_check(ord1));
  EXPECT_TRUE(multiplicity_bound_check(ord1));

  const PointReport node = analyze_point(F("Y^2 - X1^2"), at(Q, 0));
  EXPECT_TRUE(low_order_check(node));
  EXPECT_TRUE(multiplicity_bound_check(node));

  const PointReport triple = analyze_point(F("Y^3 - X1^3"), at(Q, 0));
  EXPECT_EQ(triple.ord_p_d, 6u);
  ASSERT_EQ(triple.classes.size(), 1u);
  EXPECT_FALSE(triple.classes[0].nonsingular);
  EXPECT_EQ(triple.classes[0].multiplicity, 3u);
  EXPECT_TRUE(multiplicity_bound_check(triple, triple.classes[0]));
}

TEST(Corollaries, UniversalPoints) {
  for (unsigned d = 2; d <= 5; ++d) {
    const UniversalPointReport z = analyze_universal_point(d, std::vector<Element>(d, Q.zero()));
    EXPECT_EQ(z.ord, d - 1);
    EXPECT_EQ(z.r, 1u);
    EXPECT_TRUE(z.equality_observed);
    EXPECT_TRUE(z.consistent);
  }
  const UniversalPointReport a = analyze_universal_point(2, {Q.zero(), Q.from_int(-1)});
  EXPECT_EQ(a.ord, 0u);
  EXPECT_EQ(a.r, 2u);
  EXPECT_TRUE(a.consistent);

  const Field f2 = Field::prime(2);
  const UniversalPointReport b = analyze_universal_point(2, {f2.zero(), f2.one()});
  EXPECT_EQ(b.ord, 2u);
  EXPECT_EQ(b.r, 1u);
  EXPECT_FALSE(b.equality_predicted);
  EXPECT_FALSE(b.equality_observed);
  EXPECT_TRUE(b.consistent);
  EXPECT_THROW(analyze_universal_point(9, std::vector<Element>(9, Q.zero())), DegreeUnsupported);
}

TEST(Criterion, CuratedCurvesMatchGradientOracle) {
  const std::vector<std::pair<std::string, bool>> suite{
      {"Y^2 - X1", true},
      {"Y^2 - X1^2", false},
      {"Y^2 - X1^3", false},
      {"Y^2 - X1*(X1 - 1)*(X1 - 2)", true},
      {"Y^3 - Y^2 + X1", true},
      {"Y^2 - X1^2*(X1 + 1)", false},
      {"Y^3 - X1^2", false},
      {"Y^3 - X1", true},
      {"Y^2 - (X1^2 - 2)^2", false},
      {"Y^2 - X1^4 - 1", true},
      {"Y^2 + X1^2 - 1", true},
      {"Y^3 - 3*Y + X1", true},
      {"(Y^2 - 2)^2 - X1^2", false},
  };
  for (const auto& [text, nonsingular] : suite) {
    const MonicInY f = F(text);
    const CurveReport r = curve_criterion(f);
    EXPECT_EQ(r.nonsingular, nonsingular) << text;
    EXPECT_EQ(r.nonsingular, !testkit::curve_has_singular_point(f)) << text;
  }
}

TEST(Criterion, WitnessOrders) {
  const CurveReport node = curve_criterion(F("Y^2 - X1^2"));
  ASSERT_EQ(node.witnesses.size(), 1u);
  EXPECT_EQ(node.witnesses[0].ord_p_d, 2u);
  EXPECT_EQ(node.witnesses[0].ord_universal, 1u);
  EXPECT_FALSE(node.witnesses[0].match);

  const CurveReport cusp = curve_criterion(F("Y^2 - X1^3"));
  ASSERT_EQ(cusp.witnesses.size(), 1u);
  EXPECT_EQ(cusp.witnesses[0].ord_p_d, 3u);
  EXPECT_EQ(cusp.witnesses[0].ord_universal, 1u);
}

TEST(Criterion, Refusals) {
  EXPECT_THROW(curve_criterion(F("Y^2 - X1", Field::prime(3))), CharPUnsupported);
  EXPECT_THROW(curve_criterion(MonicInY::from_poly(parse_poly("Y^2 - X1*X2", Q, 2))), SpecMismatch);
}

TEST(Scan, Examples) {
  const Field f2 = Field::prime(2);
  ScanOptions opt;
  opt.max_ext_degree = 2;
  const ScanReport a = scan_exhaustive(F("Y^2 + X1*Y + X1", f2), opt);
  EXPECT_EQ(a.points_tested, 6u);
  EXPECT_TRUE(a.violations.empty());
  EXPECT_TRUE(a.oracle_mismatches.empty());
  EXPECT_GE(a.strict_count, 1u);

  const ScanReport b = scan_exhaustive(F("Y^3 - Y^2 + X1", Field::prime(5)));
  EXPECT_EQ(b.points_tested, 5u);
  EXPECT_TRUE(b.violations.empty());
  EXPECT_TRUE(b.oracle_mismatches.empty());
  EXPECT_EQ(scan_point_count(5, 1, 1), 5u);
  EXPECT_EQ(scan_point_count(3, 2, 2), 9u + 81u);
}

TEST(Scan, BudgetAndFieldChecks) {
  ScanOptions opt;
  opt.max_ext_degree = 2;
  opt.budget = 10;
  EXPECT_THROW(scan_exhaustive(F("Y^2 - X1", Field::prime(5)), opt), BudgetExceeded);
  EXPECT_THROW(scan_exhaustive(F("Y^2 - X1")), InputError);
}

TEST(Scan, RandomFamilyOverF3) {
  const Field f3 = Field::prime(3);
  std::mt19937_64 rng(5);
  ScanReport total;
  ScanOptions opt;
  opt.max_ext_degree = 2;
  int used = 0;
  while (used < 60) {
    const MonicInY f = random_monic(f3, 1, static_cast<unsigned>(1 + rng() % 3), 2, rng);
    if (discriminant_y(f).is_zero()) continue;
    scan_into(total, f, opt);
    ++used;
  }
  EXPECT_TRUE(total.violations.empty());
  EXPECT_TRUE(total.oracle_mismatches.empty());
  EXPECT_EQ(total.points_tested, 60u * 12u);
}

TEST(DynamicEvaluate, RerunsOnBothPieces) {
  const Field ring = Field::quotient(Q, {Q.from_int(2), Q.from_int(-3), Q.one()});  // (t-1)(t-2)
  const auto out = dynamic_evaluate(ring, [](const Field& r) {
    const Element e = r.generator() - r.one();
    if (e.is_zero()) return 0;
    e.inverse();
    return 1;
  });
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].second + out[1].second, 1);
}
