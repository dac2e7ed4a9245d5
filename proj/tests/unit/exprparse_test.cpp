#include <gtest/gtest.h>

#include "ordisc/exprparse.hpp"
#include "support/generators.hpp"

using namespace ordisc;

namespace {
const Field Q = Field::rationals();
}

TEST(Parse, ExpandsProductsAndPowers) {
  EXPECT_EQ(render_poly(parse_poly("(Y - 1)*(Y + 1)", Q)), "Y^2 - 1");
  EXPECT_EQ(render_poly(parse_poly("-(-X1)^3 + 2*X1*X2", Q)), "X1^3 + 2*X1*X2");
  EXPECT_EQ(render_poly(parse_poly("X1 * 4", Q)), "4*X1");
  EXPECT_EQ(render_poly(parse_poly("1/2*Y - 3/6", Q)), "1/2*Y - 1/2");
  EXPECT_EQ(render_poly(parse_poly("Y - Y", Q)), "0");
}

TEST(Parse, ReducesIntoPrimeField) {
  const Field f5 = Field::prime(5);
  EXPECT_EQ(render_poly(parse_poly("Y^2 - X1 + 7", f5)), "Y^2 + 4*X1 + 2");
  EXPECT_EQ(render_poly(parse_poly("1/2*Y", f5)), "3*Y");
  EXPECT_THROW(parse_poly("1/5*Y", f5), NotInField);
}

TEST(Parse, ExtensionGenerator) {
  const Field f4 = parse_field("F2^2");
  EXPECT_EQ(render_poly(parse_poly("t*Y + t^2", f4)), "t*Y + (t + 1)");
  EXPECT_THROW(parse_poly("t*Y", Q), UnknownVariable);
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_poly("2X1", Q), SyntaxError);
  EXPECT_THROW(parse_poly("Y^-1", Q), NonIntegerExponent);
  EXPECT_THROW(parse_poly("Y^1.5", Q), NonIntegerExponent);
  EXPECT_THROW(parse_poly("Z + 1", Q), UnknownVariable);
  EXPECT_THROW(parse_poly("(Y + 1", Q), SyntaxError);
  EXPECT_THROW(parse_poly("Y +", Q), SyntaxError);
  EXPECT_THROW(parse_poly("1/0", Q), SyntaxError);
  try {
    parse_poly("Y + * 2", Q);
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Parse, AstShape) {
  const auto ast = parse_expr("Y^2 - 3*X1");
  ASSERT_EQ(ast->kind, ExprAST::Kind::Difference);
  EXPECT_EQ(ast->children[0]->kind, ExprAST::Kind::Power);
  EXPECT_EQ(ast->children[0]->exponent, 2u);
  EXPECT_EQ(ast->children[1]->kind, ExprAST::Kind::Product);
}

TEST(Parse, VariableCountInference) {
  EXPECT_EQ(max_x_index("Y^2 - X3*X1"), 3u);
  EXPECT_EQ(parse_poly("Y^2 - X3*X1", Q).nvars(), 4u);
  EXPECT_EQ(parse_poly("Y^2 - 1", Q).nvars(), 2u);
  EXPECT_THROW(parse_poly("X2", Q, 1), UnknownVariable);
}

TEST(Field, Specs) {
  EXPECT_EQ(parse_field("Q").kind(), FieldKind::Rationals);
  EXPECT_EQ(parse_field(" F7 ").characteristic(), 7u);
  EXPECT_EQ(parse_field("F3^2:t^2 + 1").order(), 9);
  EXPECT_THROW(parse_field("F4"), InputError);
  EXPECT_THROW(parse_field("R"), SyntaxError);
  EXPECT_THROW(parse_field("F2^3:t^2 + t + 1"), NotInField);
}

TEST(Point, PlainAndAlgebraic) {
  const PointAffine p = parse_point("1/2, -3", Q);
  ASSERT_EQ(p.dim(), 2u);
  EXPECT_EQ(p.coords[0], Q.from_rational(mpq_class(1, 2)));
  EXPECT_EQ(render_point(p), "1/2,-3");

  const PointAffine a = parse_point("alg(t^2 - 2, t), 1", Q);
  const Field ring = a.field(Q);
  EXPECT_EQ(a.coords[0] * a.coords[0], ring.from_int(2));
  EXPECT_EQ(a.coords[1], ring.one());
  EXPECT_EQ(parse_point(render_point(a), Q).coords, a.coords);
  EXPECT_THROW(parse_point("alg(t^2 - 2, t), alg(t^2 - 3, t)", Q), NotInField);
}

namespace {

MultiPoly random_canonical(testkit::Gen& g, const Field& f) {
  const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
  MultiPoly p(f, n + 1);
  const long terms = g.integer(0, 6);
  for (long t = 0; t < terms; ++t) {
    Monomial m(n + 1);
    for (auto& e : m) e = static_cast<std::uint32_t>(g.integer(0, 3));
    p.add_term(m, f.is_finite() ? g.element(f) : g.rational(f, 20));
  }
  // Force the top X index to occur so that inference sees n.
  Monomial top(n + 1, 0);
  top[n - 1] = 1;
  p.add_term(top, f.one());
  return p;
}

}  // namespace

TEST(RoundTrip, ParseOfRenderIsIdentity) {
  testkit::Gen g(2024);
  for (const Field& f : {Q, Field::prime(5)}) {
    for (int i = 0; i < 250; ++i) {
      const MultiPoly p = random_canonical(g, f);
      const std::string s = render_poly(p);
      EXPECT_EQ(parse_poly(s, f, p.nvars() - 1), p) << s;
      EXPECT_EQ(render_poly(parse_poly(s, f, p.nvars() - 1)), s);
    }
  }
}
