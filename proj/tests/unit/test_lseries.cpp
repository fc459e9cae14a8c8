#include <gtest/gtest.h>

#include <algorithm>

#include "nt/lseries.hpp"

namespace nt {
namespace {

OpSpec op(const char* text, DomainSpec d = DomainSpec::naturals()) { return parse_op_expr(text, 2, {}, d); }

std::vector<std::string> texts(const std::vector<CombPtr>& v) {
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(e->to_string());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CombPtr> four_element_T() {
  return {comb_leaf(3), comb_leaf(5), comb_apply(15, comb_leaf(3), comb_leaf(5)),
          comb_apply(15, comb_leaf(5), comb_leaf(3))};
}

TEST(LSeries, RawCombinations) {
  const auto xy = op("x*y");
  const auto els = texts(gen_F(xy, {3, 5}, 100, 2, default_bounds(xy, 1, 100)));
  for (const char* want : {"3", "5", "(3 o 5)", "(5 o 3)"}) {
    EXPECT_NE(std::find(els.begin(), els.end(), want), els.end()) << want;
  }
  const auto add = op("x+y");
  EXPECT_EQ(texts(gen_F(add, {1}, 100, 3, default_bounds(add, 1, 100))),
            (std::vector<std::string>{"((1 o 1) o 1)", "(1 o (1 o 1))", "(1 o 1)", "1"}));
  EXPECT_EQ(gen_F(xy, {3, 5}, 100, 1, default_bounds(xy, 1, 100)).size(), 2u);
}

TEST(LSeries, LeavesAreUnitsAndPrimes) {
  const auto xy = op("x*y");
  EXPECT_EQ(comb_leaves(xy, 20, default_bounds(xy, 1, 20)),
            (std::vector<std::int64_t>{1, 2, 3, 5, 7, 11, 13, 17, 19}));
}

TEST(LSeries, CanonicalCombinations) {
  const auto xy = op("x*y");
  const auto b = default_bounds(xy, 1, 30);
  const auto els = gen_TAC(xy, comb_leaves(xy, 30, b), 30, 64, b);
  const auto t = coeff_table(els, 30, "TAC");
  EXPECT_EQ(t.at(4), 1u);
  EXPECT_EQ(t.at(12), 1u);
  for (const auto& e : els) {
    if (e->value == 12) {
      EXPECT_EQ(e->to_string(), "((2 o 2) o 3)");
    }
  }
  const auto add = op("x+y");
  const auto ab = default_bounds(add, 1, 20);
  const auto t2 = coeff_table(gen_TAC(add, comb_leaves(add, 20, ab), 20, 64, ab), 20, "TAC");
  for (int i = 1; i <= 20; ++i) EXPECT_EQ(t2.at(i), 1u) << i;
  EXPECT_EQ(gen_TAC(xy, {3, 5}, 100, 1, b).size(), 2u);
}

TEST(LSeries, NonACOperationRejected) {
  const auto sq = op("x^2+y^2");
  const auto b = default_bounds(sq, 1, 50);
  EXPECT_THROW(gen_TAC(sq, comb_leaves(sq, 50, b), 50, 8, b), DomainError);
}

TEST(LSeries, Coefficients) {
  const auto t = coeff_table(four_element_T(), 20);
  for (int i = 1; i <= 20; ++i) {
    const std::uint64_t want = i == 3 || i == 5 ? 1 : i == 15 ? 2 : 0;
    EXPECT_EQ(t.at(i), want) << i;
  }
  const auto xy = op("x*y");
  const auto b = default_bounds(xy, 1, 100);
  const auto u = coeff_table(gen_TAC(xy, comb_leaves(xy, 100, b), 100, 64, b), 100, "TAC");
  for (int i = 1; i <= 100; ++i) EXPECT_EQ(u.at(i), 1u) << i;
  const auto z = coeff_table({}, 10);
  for (int i = 1; i <= 10; ++i) EXPECT_EQ(z.at(i), 0u);
}

TEST(LSeries, Series) {
  const auto t = coeff_table(four_element_T(), 20);
  const auto l = lseries_partial(t, "2", 20);
  ASSERT_TRUE(l.exact);
  EXPECT_EQ(l.value, mpq_class(1, 9) + mpq_class(1, 25) + mpq_class(2, 225));

  const auto xy = op("x*y");
  const auto b = default_bounds(xy, 1, 2000);
  const auto u = coeff_table(gen_TAC(xy, comb_leaves(xy, 2000, b), 2000, 64, b), 2000, "TAC");
  EXPECT_EQ(lseries_partial(u, "2", 2000).value, zeta_partial("2", 2000).value);
  EXPECT_EQ(defect_partial(u, "3", 2000).value, 0);
  EXPECT_EQ(lseries_partial(u, "5/2", 500).decimal, zeta_partial("5/2", 500).decimal);
  EXPECT_EQ(defect_partial(u, "1.5", 500).decimal.substr(0, 4), "0.00");
}

TEST(LSeries, ZetaApproximatesClosedForm) {
  const auto z = zeta_partial("2", 1000);
  const double pi2_6 = 1.6449340668482264;
  const double got = z.value.get_d();
  EXPECT_LT(pi2_6 - got, z.zeta_tail_bound);
  EXPECT_GT(pi2_6 - got, 0.0);
}

TEST(LSeries, DomainErrors) {
  const auto t = coeff_table(four_element_T(), 20);
  EXPECT_THROW(lseries_partial(t, "1", 20), DomainError);
  EXPECT_THROW(zeta_partial("0.5", 20), DomainError);
  EXPECT_THROW(zeta_partial("abc", 20), std::exception);
}

TEST(LSeries, AssocCommProbe) {
  const auto a = assoc_comm_probe(parse_op_expr("x+y+k", 2, {{"k", 2}}), 8);
  EXPECT_TRUE(a.commutative.value);
  EXPECT_TRUE(a.associative.value);
  const auto b = assoc_comm_probe(op("x^2+y^2"), 8);
  EXPECT_TRUE(b.commutative.value);
  EXPECT_FALSE(b.associative.value);
  EXPECT_EQ(b.associative_counterexample.size(), 3u);
  const auto c = assoc_comm_probe(op("y"), 8);
  EXPECT_FALSE(c.commutative.value);
  EXPECT_TRUE(c.associative.value);
  ASSERT_EQ(c.commutative_counterexample.size(), 2u);
  EXPECT_NE(c.commutative_counterexample[0], c.commutative_counterexample[1]);
}

}  // namespace
}  // namespace nt
