#include <gtest/gtest.h>

#include "nt/hyper_engine.hpp"
#include "nt/verify.hpp"

namespace nt {
namespace {

HyperFormula X() { return HyperFormula::leaf("x"); }
HyperFormula ap(HyperFormula a, HyperFormula b, int level = 2) {
  return HyperFormula::apply(level, std::move(a), std::move(b));
}

TEST(Notation, FlattenLeftNested) {
  const auto t = ap(ap(ap(X(), X()), X()), X());
  const auto f = flatten(t);
  EXPECT_EQ(f.operands, (std::vector<std::string>{"x", "x", "x", "x"}));
  EXPECT_EQ(f.supers, (std::vector<std::int64_t>{0, 1, 2}));
  EXPECT_EQ(structure(f), t);
}

TEST(Notation, MixedExampleBothWays) {
  const auto f = parse_hyper("(x o2 (x o2 x)) o2 y o2^4 z");
  EXPECT_EQ(f.supers, (std::vector<std::int64_t>{1, 0, 5, 4}));
  const auto t = ap(ap(X(), ap(X(), X())), ap(HyperFormula::leaf("y"), HyperFormula::leaf("z")));
  EXPECT_EQ(structure(f), t);
  EXPECT_EQ(parse_hyper(print_hyper(f)), f);
  EXPECT_EQ(parse_hyper("x o2^1 x o2^0 x o2^5 y o2^4 z"), f);
}

TEST(Notation, Leaf) {
  const auto f = flatten(X());
  EXPECT_EQ(f.operands, (std::vector<std::string>{"x"}));
  EXPECT_TRUE(f.supers.empty());
  EXPECT_TRUE(structure(f).is_leaf());
}

TEST(Notation, StructureEqualSuperscripts) {
  FlatForm f{{"x", "x", "x", "x", "x"}, {2, 2, 2, 2}, {1, 0, 2, 0}};
  const auto t = structure(f);
  EXPECT_EQ(t, ap(ap(X(), ap(X(), X())), ap(X(), X())));
  EXPECT_EQ(flatten(t).supers, (std::vector<std::int64_t>{1, 0, 2, 0}));
}

TEST(Notation, StructureArrowRightIsLeftNested) {
  FlatForm f{{"x", "x", "x", "x"}, {2, 2, 2}, {0, 1, 2}};
  EXPECT_EQ(structure(f), ap(ap(ap(X(), X()), X()), X()));
}

TEST(Notation, AmbiguousInput) {
  FlatForm f{{"x", "x", "x"}, {2, 2}, {0, 0}};
  EXPECT_THROW(structure(f), Ambiguous);
  FlatForm g{{"x", "x"}, {2, 2}, {0, 1}};
  EXPECT_THROW(structure(g), Ambiguous);
}

TEST(Notation, ArrowShorthand) {
  EXPECT_EQ(parse_hyper("4 o3^-> x").supers, (std::vector<std::int64_t>{0, 1, 2}));
  EXPECT_EQ(parse_hyper("4 o3^<- x").supers, (std::vector<std::int64_t>{2, 1, 0}));
  EXPECT_EQ(parse_hyper("4 o3^[1,0,2] x").supers, (std::vector<std::int64_t>{1, 0, 2}));
  EXPECT_EQ(parse_hyper("4 o3^-> x").levels, (std::vector<int>{2, 2, 2}));
}

TEST(Notation, PrintParseRoundTrip) {
  for (const char* text : {"x o3^0 x o3^1 x", "x o2^1 x o2^0 x o2^5 y o2^4 z", "a o1^2 b o0^0 c o2^1 d"}) {
    const auto f = parse_hyper(text);
    EXPECT_EQ(parse_hyper(print_hyper(f)), f) << text;
  }
}

TEST(Notation, SyntaxErrors) {
  EXPECT_THROW(parse_hyper("x o2"), std::exception);
  EXPECT_THROW(parse_hyper("(x o2 y"), std::exception);
}

TEST(Notation, GeneratedTreesRoundTrip) {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const auto t = sample_formula(i);
    const auto f = flatten(t);
    ASSERT_EQ(structure(f), t) << i;
    ASSERT_EQ(parse_hyper(print_hyper(f)), f) << i;
  }
}

TEST(Notation, RelabelingPreservesValue) {
  const std::map<std::string, BigInt> b{{"x", 2}, {"y", 3}, {"z", 1}};
  for (std::uint64_t i = 0; i < 200; ++i) {
    const auto t = sample_formula(i, 5);
    try {
      const auto v = eval_formula(t, b, {4096});
      EXPECT_EQ(eval_flat(flatten(t), b, {4096}), v) << i;
      EXPECT_EQ(eval_flat(flatten(structure(flatten(t))), b, {4096}), v) << i;
    } catch (const TooLarge&) {
    }
  }
}

}  // namespace
}  // namespace nt
