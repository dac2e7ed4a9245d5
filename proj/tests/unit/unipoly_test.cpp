#include <gtest/gtest.h>

#include "ordisc/exprparse.hpp"
#include "ordisc/unipoly.hpp"
#include "support/generators.hpp"

using namespace ordisc;

namespace {

UniPoly up(const Field& f, std::initializer_list<long> c) {
  std::vector<Element> v;
  for (long x : c) v.push_back(f.from_int(x));
  return UniPoly(f, v);
}

UniPoly random_uni(testkit::Gen& g, const Field& f, int max_deg) {
  std::vector<Element> c;
  const long deg = g.integer(-1, max_deg);
  for (long i = 0; i <= deg; ++i) c.push_back(g.element(f));
  return UniPoly(f, c);
}

}  // namespace

TEST(UniPoly, TrimsAndReportsDegree) {
  const Field q = Field::rationals();
  EXPECT_EQ(up(q, {1, 2, 0, 0}).degree(), 1);
  EXPECT_EQ(up(q, {0, 0}).degree(), -1);
  EXPECT_TRUE(up(q, {0}).is_zero());
}

TEST(UniPoly, DivisionWithRemainder) {
  const Field q = Field::rationals();
  // Y^3 - 1 = (Y - 1)(Y^2 + Y + 1)
  const auto [quo, rem] = up(q, {-1, 0, 0, 1}).divmod(up(q, {-1, 1}));
  EXPECT_EQ(quo, up(q, {1, 1, 1}));
  EXPECT_TRUE(rem.is_zero());
  EXPECT_THROW(up(q, {1}).divmod(UniPoly(q)), DivisionByZero);
}

TEST(UniPoly, DivisionIdentityOverSeveralFields) {
  testkit::Gen g(3);
  for (const Field& f : {Field::rationals(), Field::prime(7), parse_field("F2^3")}) {
    for (int i = 0; i < 100; ++i) {
      const UniPoly a = random_uni(g, f, 6);
      const UniPoly b = random_uni(g, f, 3);
      if (b.is_zero()) continue;
      const auto [quo, rem] = a.divmod(b);
      EXPECT_EQ(quo * b + rem, a);
      EXPECT_LT(rem.degree(), b.degree());
    }
  }
}

TEST(UniPoly, GcdIsMonicAndBezout) {
  testkit::Gen g(5);
  const Field f = Field::prime(11);
  for (int i = 0; i < 100; ++i) {
    const UniPoly a = random_uni(g, f, 5), b = random_uni(g, f, 5), c = random_uni(g, f, 2);
    const UniPoly x = a * c, y = b * c;
    const ExtendedGcd e = extended_gcd(x, y);
    EXPECT_EQ(e.s * x + e.t * y, e.g);
    if (!e.g.is_zero()) {
      EXPECT_TRUE(e.g.is_monic());
      EXPECT_TRUE((x % e.g).is_zero());
      EXPECT_TRUE((y % e.g).is_zero());
      if (!c.is_zero()) EXPECT_TRUE((e.g % c.monic()).is_zero());
    }
  }
}

TEST(UniPoly, DerivativeInCharacteristicP) {
  const Field f = Field::prime(3);
  // d/dY (Y^3 + Y) = 3Y^2 + 1 = 1
  EXPECT_EQ(up(f, {0, 1, 0, 1}).derivative(), up(f, {1}));
}

TEST(UniPoly, EvaluateAndPowMod) {
  const Field f = Field::prime(5);
  const UniPoly p = up(f, {1, 0, 1});
  EXPECT_EQ(p.evaluate(f.from_int(2)), f.zero());
  // Y^5 == Y mod (Y^2 + 1) over F5 since F25 Frobenius fixes nothing here:
  // Y^5 = Y * (Y^2)^2 = Y.
  EXPECT_EQ(UniPoly::x(f).pow_mod(5, p), UniPoly::x(f));
}

TEST(UniPoly, Rendering) {
  const Field q = Field::rationals();
  EXPECT_EQ(up(q, {-1, 0, 1}).to_string(), "Y^2 - 1");
  EXPECT_EQ(up(q, {0, 4}).to_string("X1"), "4*X1");
  EXPECT_EQ(UniPoly(q).to_string(), "0");
}
