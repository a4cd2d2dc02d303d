#include "nraprove/errors.hpp"
#include "nraprove/formula/formula.hpp"
#include "nraprove/formula/parser.hpp"
#include "nraprove/formula/shift.hpp"
#include "nraprove/formula/symbols.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace nraprove;
using nraprove::testing::Gen;

namespace {

Formula rel(const char* text) { return parse_relation(text); }
RationalFunction expr(const char* text) { return parse_expression(text); }

ShiftRules product_rules() {
  return {{"X", expr("X + 1")}, {"Y", expr("Y + s(x)")}, {"Z", expr("Z*s(x)")}};
}

Formula random_formula(Gen& gen, const std::vector<std::string>& vars, int depth) {
  if (depth == 0 || gen.chance(0.3)) {
    auto lhs = gen.rational_function(vars, 2, 3);
    auto op = static_cast<RelOp>(gen.integer(0, 5));
    return Formula::atom(lhs, op);
  }
  int n = gen.integer(2, 3);
  std::vector<Formula> kids;
  for (int i = 0; i < n; ++i) kids.push_back(random_formula(gen, vars, depth - 1));
  switch (gen.integer(0, 2)) {
  case 0: return Formula::conj(kids);
  case 1: return Formula::disj(kids);
  default: return Formula::negation(kids.front());
  }
}

} // namespace

TEST(RelOp, ComplementAndReverseAreInvolutions) {
  for (int i = 0; i < 6; ++i) {
    auto op = static_cast<RelOp>(i);
    EXPECT_EQ(complement(complement(op)), op);
    EXPECT_EQ(reverse(reverse(op)), op);
    EXPECT_EQ(parse_relop(symbol(op)), op);
    for (int sign = -1; sign <= 1; ++sign) {
      EXPECT_NE(holds(op, sign), holds(complement(op), sign));
      EXPECT_EQ(holds(op, sign), holds(reverse(op), -sign));
    }
  }
  EXPECT_EQ(complement(RelOp::Le), RelOp::Gt);
  EXPECT_EQ(complement(RelOp::Eq), RelOp::Ne);
}

TEST(Parser, PrecedenceAndLiterals) {
  EXPECT_EQ(expr("1 + 2*3"), RationalFunction(7));
  EXPECT_EQ(expr("3/2"), RationalFunction(Rational(3, 2)));
  EXPECT_EQ(expr("-x^2"), -RationalFunction(Polynomial::variable("x").pow(2)));
  EXPECT_EQ(expr("(x + 1)^2"), expr("x^2 + 2*x + 1"));
  EXPECT_EQ(expr("x - y - z"), expr("x - (y + z)"));
  EXPECT_EQ(expr("x/y/z"), expr("x/(y*z)"));
  EXPECT_EQ(expr("x^0"), RationalFunction(1));
}

TEST(Parser, ReservedForms) {
  EXPECT_EQ(expr("s(x)"), RationalFunction(Polynomial::variable("x_s1")));
  EXPECT_EQ(expr("sqrt(5)").variables(), std::vector<std::string>{"sqrt(5)"});
  EXPECT_EQ(radical_radicand("sqrt(5)"), Integer(5));
}

TEST(Parser, Errors) {
  EXPECT_THROW(expr("x^y"), ParseError);
  EXPECT_THROW(expr("x^2^3"), ParseError);
  EXPECT_THROW(expr("(x + 1"), ParseError);
  EXPECT_THROW(expr("x +"), ParseError);
  EXPECT_THROW(expr("1/0"), ParseError);
  EXPECT_THROW(expr("x/(x - x)"), ParseError);
  EXPECT_THROW(expr("x^1001"), ParseError);
  EXPECT_THROW(rel("x + 1"), ParseError);
  EXPECT_THROW(rel("x > 1 > 0"), ParseError);
}

TEST(Formula, ConstantAtomsFold) {
  EXPECT_TRUE(rel("1 <= 1").is_true());
  EXPECT_TRUE(rel("x - x > 0").is_false());
  EXPECT_TRUE(Formula::conj({rel("x > 0"), Formula::falsity()}).is_false());
  EXPECT_EQ(Formula::conj({rel("x > 0"), Formula::truth()}), rel("x > 0"));
  EXPECT_TRUE(Formula::disj({}).is_false());
}

TEST(Formula, ConjunctionsFlattenInOrder) {
  Formula f = Formula::conj({rel("x > 0"), Formula::conj({rel("y > 0"), rel("z > 0")})});
  ASSERT_EQ(f.children().size(), 3u);
  EXPECT_EQ(f.children()[0], rel("x > 0"));
  EXPECT_EQ(f.children()[2], rel("z > 0"));
}

TEST(Negate, Examples) {
  EXPECT_EQ(negate(rel("Z <= 1")), rel("Z > 1"));
  EXPECT_EQ(negate(rel("x^2 - 3 = 0")), rel("x^2 - 3 != 0"));
  Formula a = rel("x > y");
  EXPECT_EQ(negate(negate(a)), a);
  EXPECT_EQ(to_nnf(Formula::negation(Formula::negation(a))), a);
  EXPECT_EQ(negate(Formula::conj({rel("x > 0"), rel("y < 0")})), Formula::disj({rel("x <= 0"), rel("y >= 0")}));
}

TEST(Shift, Examples) {
  auto rules = product_rules();
  EXPECT_EQ(shift(rel("X = Y"), rules, 1), rel("X + 1 = Y + s(x)"));
  EXPECT_EQ(shift(rel("Z <= 1"), rules, 1), rel("Z*s(x) <= 1"));
  EXPECT_EQ(shift(rel("X = Y"), rules, 0), rel("X = Y"));
  auto z = Polynomial::variable("Z"), s1 = Polynomial::variable("x_s1"), s2 = Polynomial::variable("x_s2");
  EXPECT_EQ(shift(rel("Z <= 1"), rules, 2), Formula::relation(RationalFunction(z * s1 * s2), RelOp::Le, 1));
  EXPECT_EQ(shift(rel("x > 0"), rules, 3), Formula::relation(Polynomial::variable("x_s3"), RelOp::Gt, 0));
}

TEST(Shift, RadicalsAreConstants) {
  ShiftRules rules{{"P", expr("P*sqrt(5)")}};
  EXPECT_EQ(shift(expr("P + sqrt(5)"), rules, 1), expr("P*sqrt(5) + sqrt(5)"));
}

TEST(Shift, MissingRuleNamesTheVariable) {
  try {
    shift(rel("W > 0"), product_rules(), 1);
    FAIL() << "expected MissingShiftRule";
  } catch (const MissingShiftRule& e) {
    EXPECT_EQ(e.variable(), "W");
  }
}

TEST(Substitute, Examples) {
  EXPECT_EQ(substitute(rel("Z <= 1"), {{"Z", expr("x_1")}}), rel("x_1 <= 1"));
  EXPECT_EQ(substitute(rel("X = Y"), {{"X", expr("1")}, {"Y", expr("x_1")}}), rel("1 = x_1"));
  Formula f = Formula::conj({rel("X = Y"), rel("Z > 1/X")});
  EXPECT_EQ(substitute(f, {}), f);
}

TEST(Eval, Examples) {
  Formula f = Formula::conj({rel("x > 0"), rel("1/x > 0")});
  EXPECT_EQ(eval_formula(f, {{"x", 2}}), Truth::True);
  EXPECT_EQ(eval_formula(rel("1/x > 0"), {{"x", 0}}), Truth::Undefined);
  EXPECT_THROW(eval_formula(rel("x > y"), {{"x", 0}}), UnboundVariable);

  // The induction-step formula of the product claim at the all-ones point.
  Formula lf = Formula::conj({rel("x > 0"), rel("s(x) > 0"), rel("X = Y"), rel("X + 1 = Y + s(x)"),
                              rel("Z <= 1"), rel("Z*s(x) > 1")});
  Assignment ones{{"X", 1}, {"Y", 1}, {"Z", 1}, {"x", 1}, {"x_s1", 1}};
  EXPECT_EQ(eval_formula(lf, ones), Truth::False);
  // Oracle: every conjunct but the last is true there.
  for (std::size_t i = 0; i + 1 < lf.children().size(); ++i)
    EXPECT_EQ(eval_formula(lf.children()[i], ones), Truth::True);
}

TEST(Eval, UndefinedIsStrict) {
  Formula pole = rel("1/x > 0");
  Assignment at0{{"x", 0}};
  EXPECT_EQ(eval_formula(Formula::conj({pole, rel("x > 1")}), at0), Truth::Undefined);
  EXPECT_EQ(eval_formula(Formula::disj({pole, rel("x < 1")}), at0), Truth::Undefined);
  EXPECT_EQ(eval_formula(Formula::negation(pole), at0), Truth::Undefined);
}

// Properties.

TEST(FormulaProperty, ShiftComposes) {
  Gen gen(201);
  auto rules = product_rules();
  const std::vector<std::string> vars{"X", "Y", "Z", "x"};
  for (int i = 0; i < 60; ++i) {
    Formula f = random_formula(gen, vars, 2);
    unsigned a = gen.integer(0, 3), b = gen.integer(0, 5 - static_cast<int>(a));
    EXPECT_EQ(shift(shift(f, rules, a), rules, b), shift(f, rules, a + b));
  }
}

TEST(FormulaProperty, NegateIsInvolutionOnNnf) {
  Gen gen(202);
  for (int i = 0; i < 300; ++i) {
    Formula f = to_nnf(random_formula(gen, {"x", "y"}, 3));
    EXPECT_EQ(negate(negate(f)), f);
  }
}

TEST(FormulaProperty, NegateComplementsDefinedTruth) {
  Gen gen(203);
  int defined = 0;
  for (int i = 0; i < 300; ++i) {
    Formula f = random_formula(gen, {"x", "y"}, 3);
    Formula nf = negate(f);
    for (int j = 0; j < 10; ++j) {
      Assignment pt = gen.point({"x", "y"});
      Truth t = eval_formula(f, pt);
      if (t == Truth::Undefined) continue;
      ++defined;
      EXPECT_EQ(eval_formula(nf, pt), truth_not(t));
    }
  }
  EXPECT_GT(defined, 1000);
}

TEST(FormulaProperty, SubstituteThenEvalMatchesComposedPoint) {
  Gen gen(204);
  int compared = 0;
  for (int i = 0; i < 200; ++i) {
    Formula f = random_formula(gen, {"X", "Y"}, 2);
    Substitution b{{"X", gen.rational_function({"u", "v"}, 1, 2)}, {"Y", gen.rational_function({"u", "v"}, 1, 2)}};
    Formula g;
    try {
      g = substitute(f, b);
    } catch (const ZeroDenominator&) {
      continue;  // a denominator vanished identically under the bindings
    }
    for (int j = 0; j < 10; ++j) {
      Assignment pt = gen.point({"u", "v"});
      auto vx = b["X"].eval(pt), vy = b["Y"].eval(pt);
      if (!vx || !vy) continue;
      Truth original = eval_formula(f, {{"X", *vx}, {"Y", *vy}});
      if (original == Truth::Undefined) continue;
      ++compared;
      EXPECT_EQ(eval_formula(g, pt), original);
    }
  }
  EXPECT_GT(compared, 500);
}

TEST(FormulaProperty, ToStringReparsesForAtoms) {
  Gen gen(205);
  for (int i = 0; i < 200; ++i) {
    auto lhs = gen.rational_function({"x", "y"}, 2, 3);
    EXPECT_EQ(parse_expression(lhs.to_string()), lhs) << lhs.to_string();
  }
}
