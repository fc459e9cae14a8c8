#include <gtest/gtest.h>

#include "nt/op_expr.hpp"

namespace nt {
namespace {

std::optional<BigInt> at(const OpSpec& op, std::initializer_list<std::int64_t> args) { return eval_op(op, args); }

TEST(OpExpr, ParsesSpecOperations) {
  const auto a = parse_op_expr("x*y-3", 2, {}, DomainSpec::integers());
  EXPECT_EQ(a.arity, 2);
  EXPECT_EQ(print_op(a), "x*y-3");
  const auto b = parse_op_expr("x^2+y^2", 2);
  EXPECT_EQ(*at(b, {3, 4}), 25);
  const auto c = parse_op_expr("x1^2+x2^2+x3^2+x4^2", 4, {}, DomainSpec::naturals0());
  EXPECT_EQ(c.arity, 4);
  EXPECT_EQ(*at(c, {1, 1, 1, 2}), 7);
}

TEST(OpExpr, EvaluatesSpecExamples) {
  EXPECT_EQ(*at(parse_op_expr("x*y-3", 2, {}, DomainSpec::integers()), {1, 4}), 1);
  EXPECT_EQ(*at(parse_op_expr("x-y+8", 2), {8, 4}), 12);
  EXPECT_FALSE(at(parse_op_expr("x/y", 2), {3, 2}).has_value());
  EXPECT_EQ(*at(parse_op_expr("x/y", 2), {6, 2}), 3);
}

TEST(OpExpr, DomainRestrictsResults) {
  const auto op = parse_op_expr("x-y", 2);
  EXPECT_FALSE(at(op, {2, 5}).has_value());
  EXPECT_FALSE(at(op, {0, 0}).has_value());
  EXPECT_EQ(*at(parse_op_expr("x-y", 2, {}, DomainSpec::integers()), {2, 5}), -3);
}

TEST(OpExpr, PartialConstructs) {
  const auto r = parse_op_expr("root(x^6+y^3,6)", 2, {}, DomainSpec::naturals0());
  EXPECT_EQ(*at(r, {2, 0}), 2);
  EXPECT_FALSE(at(r, {1, 1}).has_value());
  const auto l = parse_op_expr("log(x,y)", 2);
  EXPECT_EQ(*at(l, {81, 3}), 4);
  EXPECT_FALSE(at(l, {80, 3}).has_value());
  EXPECT_EQ(*at(parse_op_expr("x*abs(y)", 2, {}, DomainSpec::integers()), {1, -5}), 5);
}

TEST(OpExpr, Params) {
  const auto op = parse_op_expr("k*x*y", 2, {{"k", 3}}, DomainSpec::integers());
  EXPECT_EQ(*at(op, {2, 5}), 30);
  EXPECT_THROW(parse_op_expr("k*x*y", 2), SyntaxError);
}

TEST(OpExpr, PrintParseRoundTrip) {
  for (const char* text : {"x*y-3", "x^2+y^2", "(x+y)*(x-y)", "x^y^2", "(x^y)^2", "-x+abs(y-3)", "x-(y-1)",
                           "x/y/2", "x/(y/2)", "root(x^6+y^3,6)", "log(x,y)+1", "2*x+3*y"}) {
    const auto a = parse_op_expr(text, 2, {}, DomainSpec::integers());
    const auto b = parse_op_expr(print_op(a), 2, {}, DomainSpec::integers());
    EXPECT_TRUE(structurally_equal(a.body, b.body)) << text << " -> " << print_op(a);
  }
}

TEST(OpExpr, SyntaxErrorsCarryPosition) {
  EXPECT_THROW(parse_op_expr("x+", 2), SyntaxError);
  EXPECT_THROW(parse_op_expr("x+)(", 2), SyntaxError);
  EXPECT_THROW(parse_op_expr("x3+y", 2), SyntaxError);
}

TEST(OpExpr, MaxVarIndex) {
  EXPECT_EQ(max_var_index(parse_op_expr("x1^2+x2^2+x3^2+x4^2", 4).body), 4);
  EXPECT_EQ(max_var_index(parse_op_expr("x*y", 2).body), 2);
  EXPECT_EQ(max_var_index(parse_op_expr("7", 1).body), 0);
}

TEST(DomainSpecTest, Parse) {
  EXPECT_TRUE(DomainSpec::parse("n0").contains(0));
  EXPECT_FALSE(DomainSpec::parse("n1").contains(0));
  EXPECT_TRUE(DomainSpec::parse("z").contains(-9));
  const auto w = DomainSpec::parse("z:-30..30");
  EXPECT_TRUE(w.finite());
  EXPECT_TRUE(w.contains(-30));
  EXPECT_FALSE(w.contains(31));
  const auto e = DomainSpec::explicit_set({5, 1, 3, 3});
  EXPECT_EQ(e.explicit_elements(), (std::vector<std::int64_t>{1, 3, 5}));
}

TEST(OpExpr, Analysis) {
  const auto t = analyze(parse_op_expr("x^2+y^2", 2));
  EXPECT_TRUE(t.monotone);
  EXPECT_EQ(t.degree[0], 2);
  EXPECT_TRUE(analyze(parse_op_expr("x*y-3", 2, {}, DomainSpec::integers())).affine_in(1));
  EXPECT_FALSE(analyze(parse_op_expr("x-y+8", 2)).monotone);
}

}  // namespace
}  // namespace nt
