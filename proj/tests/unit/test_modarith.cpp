#include <gtest/gtest.h>

#include "nt/modarith.hpp"

namespace nt {
namespace {

OpSpec zop(const char* text, std::map<std::string, BigInt> params = {}) {
  return parse_op_expr(text, 2, params, DomainSpec::integers());
}

CongruenceResult cong(std::int64_t c, std::int64_t b, std::int64_t m, const OpSpec& f) {
  CongruenceQuery q{c, b, m, addition_pair(), f};
  return congruent(q, default_bounds(f, 0, 0));
}

TEST(ModArith, InversePairs) {
  EXPECT_TRUE(inverse_check(addition_pair(), 12).holds.value);
  const auto n1 = DomainSpec::naturals();
  const InversePair div{parse_op_expr("x*y", 2, {}, n1), parse_op_expr("x/y", 2, {}, n1), InverseSide::Right};
  const auto d = inverse_check(div, 12);
  EXPECT_TRUE(d.holds.value);
  EXPECT_GT(d.checked, 0u);
  const InversePair lg{parse_op_expr("y^x", 2, {}, n1), parse_op_expr("log(x,y)", 2, {}, n1), InverseSide::Right};
  EXPECT_TRUE(inverse_check(lg, 6).holds.value);
  const InversePair wrong{zop("x+y"), zop("x+y"), InverseSide::Right};
  const auto w = inverse_check(wrong, 4);
  EXPECT_FALSE(w.holds.value);
  EXPECT_EQ(w.counterexample.size(), 2u);
}

TEST(ModArith, Congruences) {
  const auto a = cong(17, 5, 12, zop("x*y"));
  EXPECT_TRUE(a.holds.value);
  EXPECT_EQ(*a.d, 12);
  EXPECT_EQ(*a.alpha, 1);
  const auto b = cong(7776, 6, 5, zop("k*x*y", {{"k", 3}}));
  EXPECT_TRUE(b.holds.value);
  EXPECT_EQ(*b.d, 7770);
  EXPECT_EQ(*b.alpha, 518);
  const auto c = cong(7, 5, 3, zop("x*y"));
  EXPECT_FALSE(c.holds.value);
  EXPECT_TRUE(c.holds.proven);
}

TEST(ModArith, CongruenceUndefinedDifference) {
  const auto n1 = DomainSpec::naturals();
  const auto f = parse_op_expr("x*y", 2, {}, n1);
  CongruenceQuery q{5, 7, 2, {parse_op_expr("x+y", 2, {}, n1), parse_op_expr("x-y", 2, {}, n1), InverseSide::Right}, f};
  const auto r = congruent(q, default_bounds(f, 1, 1));
  EXPECT_FALSE(r.holds.value);
  EXPECT_FALSE(r.diagnostic.empty());
}

TEST(ModArith, AgreesWithOrdinaryCongruence) {
  const auto f = zop("x*y");
  const auto b = default_bounds(f, 0, 0);
  int n = 0;
  for (std::int64_t c = -12; c <= 12; ++c) {
    for (std::int64_t r = 0; r < 20; ++r) {
      for (std::int64_t m = 1; m <= 20; ++m, ++n) {
        CongruenceQuery q{c, r, m, addition_pair(), f};
        ASSERT_EQ(congruent(q, b).holds.value, (c - r) % m == 0) << c << " " << r << " " << m;
      }
    }
  }
  EXPECT_EQ(n, 10000);
}

TEST(ModArith, PowerFold) {
  EXPECT_EQ(power_fold(zop("2*x*y"), 3, 3), 108);
  EXPECT_EQ(power_fold(zop("2*x+3*y"), 2, 5), 322);
  EXPECT_EQ(power_fold(zop("x^2-y"), 9, 1), 9);
  EXPECT_THROW(power_fold(zop("x*y"), 3, 0), DomainError);
}

TEST(ModArith, FermatKxy) {
  const auto a = fermat_kxy_check(3, 2, 5);
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.fold, 3 * 3 * 3 * 3 * 32);
  for (int x = 1; x <= 10; ++x) EXPECT_TRUE(fermat_kxy_check(1, x, 7).ok()) << x;
  EXPECT_TRUE(fermat_kxy_check(2, 7, 3).ok());
  EXPECT_THROW(fermat_kxy_check(5, 2, 5), DomainError);
  EXPECT_THROW(fermat_kxy_check(1, 2, 9), DomainError);
}

TEST(ModArith, FermatLinear) {
  const auto a = fermat_linear_check(2, 3, 1, 2, 5);
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.fold, 322);
  for (int k = 1; k <= 5; ++k) {
    const auto d = fermat_linear_check(0, 1, 0, k, 5);
    EXPECT_TRUE(d.ok());
    EXPECT_EQ(d.fold, k);
  }
  EXPECT_TRUE(fermat_linear_check(4, 3, 2, 3, 7).ok());
  EXPECT_THROW(fermat_linear_check(3, 3, 1, 2, 5), DomainError);
  EXPECT_THROW(fermat_linear_check(2, 3, 1, 2, 3), DomainError);
}

TEST(ModArith, FoldMatchesClosedForms) {
  for (int k = 1; k <= 10; ++k) {
    const auto kxy = zop("k*x*y", {{"k", k}});
    for (int a = 1; a <= 10; ++a) {
      for (std::uint64_t p = 1; p <= 12; ++p) {
        ASSERT_EQ(power_fold(kxy, a, p), kxy_fold_closed(k, a, p)) << k << a << p;
      }
    }
  }
  for (int h = -3; h <= 3; ++h) {
    for (int v = 2; v <= 6; ++v) {
      const auto lin = zop("u*x+v*y", {{"u", h * (v - 1)}, {"v", v}});
      for (int k = 1; k <= 10; ++k) {
        for (std::uint64_t p = 1; p <= 12; ++p) {
          ASSERT_EQ(power_fold(lin, k, p), linear_fold_closed(h * (v - 1), v, k, p)) << h << v << k << p;
        }
      }
    }
  }
}

TEST(ModArith, Grids) {
  const auto a = fermat_kxy_grid(20, 20, 100, 2);
  EXPECT_GT(a.cases, 0u);
  EXPECT_EQ(a.failures, 0u);
  const auto b = fermat_linear_grid(-3, 3, 2, 6, 10, 100, 2);
  EXPECT_GT(b.cases, 0u);
  EXPECT_EQ(b.failures, 0u);
}

}  // namespace
}  // namespace nt
