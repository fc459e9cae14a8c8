#include <gtest/gtest.h>

#include "nt/hyper_engine.hpp"

namespace nt {
namespace {

HyperFormula X() { return HyperFormula::leaf("x"); }
HyperFormula ap(HyperFormula a, HyperFormula b) { return HyperFormula::apply(2, std::move(a), std::move(b)); }

TEST(HyperEngine, Eval) {
  EXPECT_EQ(hyper_eval(4, 3, OrderSpec::left(), 2), 256);
  EXPECT_EQ(hyper_eval(4, 3, OrderSpec::right(), 2), 65536);
  EXPECT_EQ(hyper_eval(1, 7, OrderSpec::right(), 9), 9);
  EXPECT_EQ(hyper_eval(1, 7, OrderSpec::left(), 9), 9);
}

TEST(HyperEngine, LowLevels) {
  EXPECT_EQ(hyper_eval(5, 1, OrderSpec::right(), 7), 35);
  EXPECT_EQ(hyper_eval(5, 2, OrderSpec::left(), 3), 243);
  EXPECT_EQ(hyper_eval(3, 3, OrderSpec::left(), 3), 19683);  // 3^(3^2)
}

TEST(HyperEngine, SuffixConvention) {
  EXPECT_EQ(hyper_binary(2, 3, 2), 8);  // 3 o2 2 = 2^3
  EXPECT_EQ(hyper_binary(2, 0, 0), 1);
  EXPECT_EQ(hyper_binary(1, 2, 5), 10);
  EXPECT_EQ(hyper_binary(0, 2, 5), 7);
}

TEST(HyperEngine, EvalFormula) {
  const std::map<std::string, BigInt> b{{"x", 2}};
  EXPECT_EQ(eval_formula(ap(ap(ap(X(), X()), X()), X()), b), 65536);
  EXPECT_EQ(eval_formula(ap(X(), ap(X(), ap(X(), X()))), b), 256);
  EXPECT_EQ(eval_formula(HyperFormula::leaf("5"), {}), 5);
  EXPECT_THROW(eval_formula(HyperFormula::leaf("q"), {}), std::out_of_range);
}

TEST(HyperEngine, ZeroTower) {
  EXPECT_EQ(zero_tower(3), 0);
  EXPECT_EQ(zero_tower(4), 1);
  EXPECT_EQ(zero_tower(1), 0);
  for (std::uint64_t n = 1; n <= 20; ++n) EXPECT_EQ(zero_tower(n), n % 2 == 0 ? 1 : 0) << n;
}

TEST(HyperEngine, Distributivity) {
  const auto big = distrib_check(3, 3, 2, 2);
  EXPECT_TRUE(big.equal);
  EXPECT_EQ(big.lhs, BigInt(1) << 512);
  const auto add = distrib_check(1, 2, 5, 7);
  EXPECT_TRUE(add.equal);
  EXPECT_EQ(add.lhs, 24);
  const auto mul = distrib_check(2, 3, 2, 3);
  EXPECT_TRUE(mul.equal);
  EXPECT_EQ(mul.lhs, 216);
}

TEST(HyperEngine, DistributivityGrid) {
  for (int i = 1; i <= 2; ++i) {
    for (std::uint64_t n = 1; n <= 6; ++n) {
      for (int x = 1; x <= 6; ++x) {
        for (int y = 1; y <= 6; ++y) EXPECT_TRUE(distrib_check(i, n, x, y).equal) << i << n << x << y;
      }
    }
  }
  for (std::uint64_t n = 1; n <= 3; ++n) {
    for (int x = 1; x <= 2; ++x) {
      for (int y = 1; y <= 2; ++y) EXPECT_TRUE(distrib_check(3, n, x, y).equal) << n << x << y;
    }
  }
}

TEST(HyperEngine, TooLarge) {
  EXPECT_THROW(hyper_eval(6, 3, OrderSpec::right(), 3), TooLarge);
  EXPECT_THROW(hyper_eval(5, 3, OrderSpec::right(), 2, {1000}), TooLarge);
}

}  // namespace
}  // namespace nt
