#include <gtest/gtest.h>

#include "nt/hyper_factor.hpp"

namespace nt {
namespace {

using Terms = std::vector<HyperTerm>;

TEST(HyperFactor, Usual) {
  EXPECT_EQ(factor_usual(12), (PrimeFactorization{{2, 2}, {3, 1}}));
  EXPECT_TRUE(factor_usual(1).empty());
  EXPECT_EQ(factor_usual(BigInt("7625597484987")), (PrimeFactorization{{3, 27}}));
  const BigInt semi = BigInt("1000000007") * BigInt("998244353");
  EXPECT_EQ(factor_usual(semi), (PrimeFactorization{{BigInt("998244353"), 1}, {BigInt("1000000007"), 1}}));
}

TEST(HyperFactor, ExpPrime) {
  EXPECT_TRUE(is_exp_prime(6));
  EXPECT_FALSE(is_exp_prime(8));
  EXPECT_TRUE(is_exp_prime(72));
  EXPECT_FALSE(is_exp_prime_bf(16));
  EXPECT_FALSE(is_exp_prime_bf(36));
  EXPECT_TRUE(is_exp_prime_bf(2));
  EXPECT_TRUE(is_exp_prime_bf(72, 8));
}

TEST(HyperFactor, ExpPrimeAgreesWithBruteForce) {
  for (int n = 1; n <= 5000; ++n) ASSERT_EQ(is_exp_prime(n), is_exp_prime_bf(n)) << n;
}

TEST(HyperFactor, Hyper3) {
  EXPECT_EQ(hyper_factorize(256, 3).terms, (Terms{{2, 4}}));
  EXPECT_EQ(hyper_factorize(6, 3).terms, (Terms{{6, 1}}));
  EXPECT_EQ(hyper_factorize(BigInt("2176782336"), 3).terms, (Terms{{6, 2}, {2, 1}}));
}

TEST(HyperFactor, Recompose) {
  EXPECT_EQ(recompose({3, {{2, 4}}, false}), 256);
  EXPECT_EQ(recompose({3, {{6, 2}, {2, 1}}, false}), BigInt("2176782336"));
  EXPECT_EQ(recompose({3, {{7, 1}}, false}), 7);
}

TEST(HyperFactor, Uniqueness) {
  auto one = [](std::int64_t n) {
    const auto reps = enumerate_hyper3_reps(n, 16);
    EXPECT_EQ(reps.size(), 1u) << n;
    return reps.empty() ? Terms{} : reps[0].terms;
  };
  EXPECT_EQ(one(256), (Terms{{2, 4}}));
  EXPECT_EQ(one(64), (Terms{{2, 2}, {3, 1}}));
  EXPECT_EQ(one(7), (Terms{{7, 1}}));
  EXPECT_EQ(hyper_factorize(64, 3).terms, (Terms{{2, 2}, {3, 1}}));
}

TEST(HyperFactor, RoundTripAllLevels) {
  for (int level = 1; level <= 3; ++level) {
    for (int n = 2; n <= 3000; ++n) {
      const auto hf = hyper_factorize(n, level);
      ASSERT_EQ(recompose(hf), n) << level << " " << n;
      ASSERT_TRUE(check_side_conditions(hf)) << level << " " << n;
    }
  }
}

TEST(HyperFactor, Level2IsUsualFactorization) {
  EXPECT_EQ(hyper_factorize(360, 2).terms, (Terms{{2, 3}, {3, 2}, {5, 1}}));
}

}  // namespace
}  // namespace nt
