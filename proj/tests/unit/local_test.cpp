#include <gtest/gtest.h>

#include "ordisc/exprparse.hpp"
#include "ordisc/local.hpp"
#include "ordisc/resultant.hpp"
#include "support/generators.hpp"

using namespace ordisc;

namespace {

const Field Q = Field::rationals();

MonicInY F(const std::string& s, const Field& f = Q) {
  return MonicInY::from_poly(parse_poly(s, f, 1));
}

PointAffine at(const Field& f, long x) { return PointAffine{{f.from_int(x)}}; }

}  // namespace

TEST(MuTilde, ExactValues) {
  EXPECT_EQ(mu_tilde(DistinguishedPoly::exact(F("Y^2 - X1"))).value, 0u);
  EXPECT_EQ(mu_tilde(DistinguishedPoly::exact(F("Y^2 - X1^3"))).value, 2u);
  EXPECT_EQ(mu_tilde(DistinguishedPoly::exact(F("Y"))).value, 0u);
  const MuTilde m = mu_tilde(DistinguishedPoly::exact(F("Y^2 + X1*Y + X1", Field::prime(2))));
  EXPECT_EQ(m.value, 1u);
  EXPECT_EQ(m.disc_order, 2u);
  EXPECT_TRUE(mu_tilde(DistinguishedPoly::exact(F("Y^2 - X1", Field::prime(2)))).is_infinite());
}

TEST(MuTilde, RejectsNonDistinguished) {
  EXPECT_THROW(DistinguishedPoly::exact(F("Y^2 - 1 - X1")), InputError);
  EXPECT_THROW(DistinguishedPoly::exact(F("Y^2 + Y + X1")), InputError);
}

TEST(MuTilde, TruncatedInput) {
  const MultiPoly f = parse_poly("Y^2 - X1^5", Q, 1);
  const MuTilde exact = mu_tilde(DistinguishedPoly::truncated(TruncatedSeries(f, 1, 8)));
  EXPECT_FALSE(exact.at_least);
  EXPECT_EQ(exact.value, 4u);
  const MuTilde bound = mu_tilde(DistinguishedPoly::truncated(TruncatedSeries(f, 1, 3)));
  EXPECT_TRUE(bound.at_least);
  EXPECT_EQ(bound.value, 2u);
  EXPECT_THROW(mu_tilde(DistinguishedPoly::truncated(TruncatedSeries(f, 1, 1))),
               PrecisionInsufficient);
  EXPECT_THROW(DistinguishedPoly::truncated(TruncatedSeries(f, 1, 0)), PrecisionZero);
}

TEST(DistinguishedVerdict, Verdicts) {
  const DistinguishedVerdict a = distinguished_verdict(DistinguishedPoly::exact(F("Y^2 - X1")));
  EXPECT_TRUE(a.equality_predicted);
  EXPECT_TRUE(a.equality_observed);
  EXPECT_EQ(a.ord0_f, 1u);
  EXPECT_THROW(distinguished_verdict(DistinguishedPoly::exact(F("Y^2 - X1", Field::prime(2)))),
               DiscriminantZero);
  const DistinguishedVerdict c =
      distinguished_verdict(DistinguishedPoly::exact(F("Y^2 + X1*Y + X1", Field::prime(2))));
  EXPECT_EQ(c.ord0_f, 1u);
  EXPECT_TRUE(c.p_divides_d);
  EXPECT_FALSE(c.equality_predicted);
  EXPECT_EQ(c.mu.value, 1u);
}

TEST(DistinguishedVerdict, AllSmallDistinguishedOverF2) {
  const Field f2 = Field::prime(2);
  std::size_t checked = 0;
  for (unsigned d = 1; d <= 3; ++d) {
    for (const auto& f : testkit::all_distinguished(f2, d, 2)) {
      if (discriminant_y(f).is_zero()) continue;
      EXPECT_NO_THROW(distinguished_verdict(DistinguishedPoly::exact(f)));
      ++checked;
    }
  }
  EXPECT_GT(checked, 20u);
}

TEST(Hensel, CubicAtOrigin) {
  const MonicInY f = F("Y^3 - Y^2 + X1");
  const HenselFactorization h = hensel_split(f, at(Q, 0), 4);
  ASSERT_EQ(h.r(), 2u);
  EXPECT_EQ(h.centers[0], Q.zero());
  EXPECT_EQ(h.degrees[0], 2u);
  EXPECT_EQ(h.centers[1], Q.one());
  EXPECT_EQ(h.degrees[1], 1u);
  const std::vector<Element> zero{Q.zero()};
  EXPECT_EQ(h.factors[0].poly().evaluate_prefix(zero), parse_poly("Y^2", Q, 0));
  EXPECT_EQ(h.factors[1].poly().evaluate_prefix(zero), parse_poly("Y - 1", Q, 0));
  EXPECT_EQ(h.product(), TruncatedSeries(f.to_poly(), 1, 4));
  // The linear factor is Y - y(X) with y the root through 1:
  // y = 1 - X - 2X^2 - 7X^3 + ...
  EXPECT_EQ(h.factors[1].poly(), parse_poly("Y - 1 + X1 + 2*X1^2 + 7*X1^3", Q, 1));
}

TEST(Hensel, RecoversKnownFactors) {
  const MonicInY f = F("(Y^2 - X1)*(Y - 1)");
  const HenselFactorization h = hensel_split(f, at(Q, 0), 6);
  ASSERT_EQ(h.r(), 2u);
  EXPECT_EQ(h.factors[0].poly(), parse_poly("Y^2 - X1", Q, 1));
  EXPECT_EQ(h.factors[1].poly(), parse_poly("Y - 1", Q, 1));
}

TEST(Hensel, SingleClassIsTrivial) {
  const HenselFactorization h = hensel_split(F("Y^2 - X1"), at(Q, 0), 3);
  ASSERT_EQ(h.r(), 1u);
  EXPECT_EQ(h.factors[0].poly(), parse_poly("Y^2 - X1", Q, 1));
  EXPECT_NO_THROW(verify_product_formula(h, discriminant_y(F("Y^2 - X1"))));
}

TEST(Hensel, Errors) {
  EXPECT_THROW(hensel_split(F("Y^2 - 2 - X1"), at(Q, 0), 3), RootsNotSplit);
  EXPECT_THROW(hensel_split(F("Y^2 - X1"), at(Q, 0), 0), PrecisionZero);
}

TEST(Hensel, ProductFormulaForCubic) {
  const MonicInY f = F("Y^3 - Y^2 + X1");
  const HenselFactorization h = hensel_split(f, at(Q, 0), 5);
  const ProductFormulaReport r = verify_product_formula(h, discriminant_y(f));
  EXPECT_TRUE(r.product_ok);
  EXPECT_EQ(r.disc_order, 1u);
  ASSERT_EQ(r.factor_orders.size(), 2u);
  EXPECT_EQ(r.factor_orders[0], 1u);
  EXPECT_EQ(r.factor_orders[1], 0u);
  // R_12(0) = (0 - 1)^(2*1) = 1
  EXPECT_EQ(h.resultant(0, 1).poly().coeff(Monomial{0}), Q.one());
}

TEST(Hensel, RandomSplitFibersOverQ) {
  testkit::Gen g(101);
  int done = 0;
  while (done < 100) {
    const auto sc = g.split_fiber(Q, 3, 2);
    const MultiPoly disc = discriminant_y(sc.f);
    if (disc.is_zero()) continue;
    const PointAffine p{{sc.x0}};
    const HenselFactorization h = hensel_split(sc.f, p, 8);
    EXPECT_EQ(h.r(), sc.centers.size());
    EXPECT_NO_THROW(verify_product_formula(h, discriminant_y(sc.f.shifted(p))));
    ++done;
  }
}

TEST(Hensel, FactorMuMatchesResplitAfterShift) {
  testkit::Gen g(103);
  int done = 0;
  while (done < 40) {
    const auto sc = g.split_fiber(Q, static_cast<unsigned>(g.integer(2, 4)), 2);
    if (discriminant_y(sc.f).is_zero() || sc.centers.size() < 2) continue;
    const PointAffine p{{sc.x0}};
    const unsigned cap = default_cap(sc.f, p);
    const HenselFactorization h = hensel_split(sc.f, p, cap);
    for (std::size_t i = 0; i < h.r(); ++i) {
      PointAffine q = p;
      q.coords.push_back(h.centers[i]);
      const MonicInY moved = MonicInY::from_poly(taylor_shift(sc.f.to_poly(), q));
      const HenselFactorization local = hensel_split(moved, PointAffine{{Q.zero()}}, cap);
      std::size_t k = 0;
      while (!local.centers[k].is_zero()) ++k;
      EXPECT_EQ(factor_mu_tilde(h, i).value, factor_mu_tilde(local, k).value);
    }
    ++done;
  }
}

TEST(LocalOrder, Examples) {
  const LocalOrderDecomposition a = local_order_decomposition(F("Y^3 - Y^2 + X1"), at(Q, 0));
  EXPECT_EQ(a.lhs, 1u);
  EXPECT_EQ(a.r, 2u);
  ASSERT_EQ(a.rhs_terms.size(), 2u);
  EXPECT_EQ(a.rhs_terms[0].value, 0u);
  EXPECT_EQ(a.rhs_terms[1].value, 0u);

  const LocalOrderDecomposition b = local_order_decomposition(F("Y^2 - X1^2"), at(Q, 0));
  EXPECT_EQ(b.lhs, 2u);
  EXPECT_EQ(b.r, 1u);
  EXPECT_EQ(b.rhs_terms[0].value, 1u);
  EXPECT_EQ(b.rhs(), 2u);

  const LocalOrderDecomposition c = local_order_decomposition(F("Y^2 - X1"), at(Q, 1));
  EXPECT_EQ(c.lhs, 0u);
  EXPECT_EQ(c.r, 2u);
  EXPECT_EQ(c.cap, 4u);
}

TEST(LocalOrder, FiniteFieldPoint) {
  const Field f5 = Field::prime(5);
  const LocalOrderDecomposition a =
      local_order_decomposition(F("Y^3 - Y^2 + X1", f5), at(f5, 0));
  EXPECT_EQ(a.lhs, 1u);
  EXPECT_EQ(a.rhs(), 1u);
}
