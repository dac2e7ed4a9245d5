#include <gtest/gtest.h>

#include "ordisc/exprparse.hpp"
#include "ordisc/field.hpp"
#include "support/generators.hpp"

using namespace ordisc;

namespace {

Field f4() { return parse_field("F2^2:t^2 + t + 1"); }

}  // namespace

TEST(PrimeField, ArithmeticModP) {
  const Field f5 = Field::prime(5);
  EXPECT_EQ(f5.from_int(3) * f5.from_int(4), f5.from_int(2));
  EXPECT_EQ(f5.from_int(2).inverse(), f5.from_int(3));
  EXPECT_EQ(f5.from_int(-1), f5.from_int(4));
  EXPECT_EQ(f5.from_rational(mpq_class(1, 2)), f5.from_int(3));
  EXPECT_THROW(f5.one() / f5.zero(), DivisionByZero);
  EXPECT_THROW(f5.from_rational(mpq_class(1, 5)), NotInField);
}

TEST(PrimeField, RejectsComposite) {
  EXPECT_THROW(Field::prime(6), InputError);
  EXPECT_THROW(Field::prime(1), InputError);
  EXPECT_TRUE(is_prime(1000003));
  EXPECT_FALSE(is_prime(1000001));
}

TEST(ExtensionField, FourElements) {
  const Field f = f4();
  const Element t = f.generator();
  EXPECT_EQ(t * t, t + f.one());
  EXPECT_EQ(t.pow(3), f.one());
  EXPECT_EQ(f.order(), 4);
  EXPECT_EQ(f.elements().size(), 4u);
  EXPECT_EQ(f.to_string(), "F2^2:t^2 + t + 1");
}

TEST(ExtensionField, ReducibleModulusRejected) {
  EXPECT_THROW(parse_field("F2^2:t^2 + 1"), NotInField);
  EXPECT_THROW(parse_field("F3^2:t^2 + 2"), NotInField);
}

TEST(ExtensionField, FirstIrreducible) {
  EXPECT_EQ(parse_field("F2^2").to_string(), "F2^2:t^2 + t + 1");
  EXPECT_EQ(parse_field("F2^3").to_string(), "F2^3:t^3 + t + 1");
  EXPECT_EQ(parse_field("F3^2").to_string(), "F3^2:t^2 + 1");
}

TEST(ExtensionField, FieldAxiomsOnRandomElements) {
  const Field f = parse_field("F3^2");
  testkit::Gen g(11);
  for (int i = 0; i < 200; ++i) {
    const Element a = g.element(f), b = g.element(f), c = g.element(f);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a.pow(9), a);
    if (!b.is_zero()) EXPECT_EQ((a * b) / b, a);
  }
}

TEST(ExtensionField, PthRootInvertsFrobenius) {
  const Field f = parse_field("F2^3");
  for (const auto& a : f.elements()) EXPECT_EQ(a.pth_root().pow(2), a);
  const Field g = parse_field("F5^2");
  for (const auto& a : g.elements()) EXPECT_EQ(a.pth_root().pow(5), a);
}

TEST(ExtensionField, Tower) {
  const Field base = f4();
  const Element t = base.generator();
  // u^2 + u + t is irreducible over F4: its roots would satisfy
  // x^2 + x = t, and the trace of t down to F2 is 1.
  const Field tower = Field::extension(base, {t, base.one(), base.one()});
  EXPECT_EQ(tower.order(), 16);
  const Element u = tower.generator();
  EXPECT_EQ(u * u + u + tower.convert(t), tower.zero());
  EXPECT_EQ(u.pow(16), u);
  EXPECT_TRUE(tower.contains(base));
  EXPECT_TRUE(tower.contains(Field::prime(2)));
}

TEST(QuotientRing, ZeroDivisorSplits) {
  const Field q = Field::rationals();
  // t^2 - 1 = (t - 1)(t + 1)
  const Field ring = Field::quotient(q, {q.from_int(-1), q.zero(), q.one()});
  EXPECT_FALSE(ring.is_field());
  const Element t = ring.generator();
  EXPECT_EQ(t * t, ring.one());
  const Element z = t - ring.one();
  try {
    (void)z.inverse();
    FAIL() << "expected a split";
  } catch (const ZeroDivisorSplit& s) {
    const UniPoly g1(q, s.g1()), g2(q, s.g2());
    EXPECT_EQ(g1 * g2, UniPoly(q, ring.modulus()));
    EXPECT_EQ(g1, UniPoly(q, {q.from_int(-1), q.one()}));
  }
  EXPECT_EQ(z.zero_test().kind, ZeroTestKind::Split);
  EXPECT_EQ((t + ring.from_int(2)).zero_test().kind, ZeroTestKind::Nonzero);
  EXPECT_EQ((t * t - ring.one()).zero_test().kind, ZeroTestKind::Zero);
}

TEST(QuotientRing, RequiresSquarefreeModulus) {
  const Field q = Field::rationals();
  EXPECT_THROW(Field::quotient(q, {q.zero(), q.zero(), q.one()}), InputError);
}

TEST(Conversion, RationalsReduceIntoPrimeAndExtension) {
  const Field f = f4();
  const Element h = f.convert(Field::rationals().from_rational(mpq_class(3)));
  EXPECT_EQ(h, f.one());
  EXPECT_THROW(Field::prime(3).convert(f.generator()), SpecMismatch);
}
