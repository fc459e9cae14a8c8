#include <gtest/gtest.h>

#include "nt/genprime.hpp"

namespace nt {
namespace {

OpSpec op(const char* text, DomainSpec d = DomainSpec::naturals(), std::map<std::string, BigInt> params = {}) {
  return parse_op_expr(text, 2, params, d);
}

CertBounds bounds_for(const OpSpec& f) { return default_bounds(f, 1, 32); }

TEST(GenPrime, Units) {
  const auto xy = op("x*y");
  const auto a = is_left_unit(xy, 1, bounds_for(xy));
  EXPECT_TRUE(a.value);
  EXPECT_TRUE(a.proven);
  const auto z3 = op("x*y-3", DomainSpec::integers());
  const auto b = is_left_unit(z3, 1, bounds_for(z3));
  EXPECT_TRUE(b.value);
  EXPECT_TRUE(b.proven);
  const auto m8 = op("x-y+8");
  const auto c = is_left_unit(m8, 8, bounds_for(m8));
  EXPECT_FALSE(c.value);
  EXPECT_TRUE(c.proven);
}

TEST(GenPrime, UnitWitness) {
  const auto z3 = op("x*y-3", DomainSpec::integers());
  EXPECT_EQ(unit_witness(z3, 1, 2, bounds_for(z3)), 5);
  const auto xy = op("x*y");
  EXPECT_EQ(unit_witness(xy, 1, 42, bounds_for(xy)), 42);
  const auto xa = op("x*abs(y)", DomainSpec::integers());
  const auto w = unit_witness(xa, 1, 5, bounds_for(xa));
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(*w == 5 || *w == -5);
}

TEST(GenPrime, Zeros) {
  const auto xy = op("x*y", DomainSpec::naturals0());
  EXPECT_TRUE(is_left_zero(xy, 0, bounds_for(xy)).value);
  const auto add = op("x+y", DomainSpec::naturals0());
  EXPECT_FALSE(is_left_zero(add, 0, bounds_for(add)).value);
  const auto pw = op("x^y", DomainSpec::naturals0());
  EXPECT_FALSE(is_left_zero(pw, 0, bounds_for(pw)).value);  // 0^0 = 1
  EXPECT_TRUE(is_left_zero(pw, 1, bounds_for(pw)).value);  // 1^k = 1
  EXPECT_FALSE(is_right_zero(pw, 1, bounds_for(pw)).value);
}

TEST(GenPrime, ClassifyTopLevelAndDeep) {
  const auto z3 = op("x*y-3", DomainSpec::integers());
  const auto b = bounds_for(z3);
  EXPECT_EQ(classify(z3, 16, b).verdict, Verdict::Prime);
  const auto deep = classify(z3, 16, b, Semantics::deep(2));
  ASSERT_EQ(deep.verdict, Verdict::Composite);
  ASSERT_TRUE(deep.witness.has_value());
  EXPECT_TRUE(verify_witness(z3, *deep.witness, 16, b, Semantics::deep(2)));
  const Witness nested{16, {Witness{19, {}}, Witness{1, {Witness{2, {}}, Witness{2, {}}}}}};
  EXPECT_TRUE(verify_witness(z3, nested, 16, b, Semantics::deep(2)));
  EXPECT_FALSE(verify_witness(z3, nested, 16, b, Semantics::top()));
}

TEST(GenPrime, ClassifyComposite) {
  const auto m8 = op("x-y+8");
  const auto b = bounds_for(m8);
  // f(a,12) = a-4 is onto, so 12 is a right unit; the pair (8,4) still qualifies.
  const auto c = classify(m8, 12, b);
  EXPECT_EQ(c.verdict, Verdict::Unit);
  EXPECT_TRUE(c.right_unit());
  const std::vector<std::int64_t> args{8, 4};
  EXPECT_TRUE(qualifies(m8, args, b));
  const auto w = find_composite_witness(m8, 12, b);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->to_string(), "f(5,1)");
  const auto seven = classify(m8, 7, b);
  ASSERT_EQ(seven.verdict, Verdict::Composite);
  EXPECT_TRUE(verify_witness(m8, *seven.witness, 7, b, Semantics::top()));
}

TEST(GenPrime, SievePowerTo28) {
  const auto pw = op("x^y");
  const auto t = sieve(pw, 1, 28, default_bounds(pw, 1, 28));
  EXPECT_EQ(t.with(Verdict::Prime),
            (std::vector<std::int64_t>{2, 3, 5, 6, 7, 10, 11, 12, 13, 14, 15, 17, 18, 19, 20, 21, 22, 23, 24, 26, 28}));
  EXPECT_EQ(t.with(Verdict::Unit), (std::vector<std::int64_t>{1}));
  const auto* one = t.find(1);
  ASSERT_NE(one, nullptr);
  EXPECT_TRUE(one->right_unit());
  EXPECT_FALSE(t.notes.empty());
  EXPECT_TRUE(t.with(Verdict::Unknown).empty());
}

TEST(GenPrime, SieveAddition) {
  const auto add = op("x+y");
  const auto t = sieve(add, 1, 30, default_bounds(add, 1, 30));
  EXPECT_EQ(t.with(Verdict::Prime), (std::vector<std::int64_t>{1}));
}

TEST(GenPrime, SieveScaledWindow) {
  const auto ky = op("k*y", DomainSpec::window(-30, 30), {{"k", 3}});
  const auto t = sieve(ky, -30, 30, default_bounds(ky, -30, 30));
  std::vector<std::int64_t> threes;
  for (std::int64_t n = -30; n <= 30; n += 3) threes.push_back(n);
  EXPECT_EQ(t.with(Verdict::Composite), threes);
}

TEST(GenPrime, PrimeSets) {
  const auto sq = op("x^2+y^2");
  EXPECT_EQ(prime_set(sq, 1, 27, default_bounds(sq, 1, 27)).explicit_elements(),
            (std::vector<std::int64_t>{1, 3, 4, 6, 7, 9, 11, 12, 14, 15, 16, 19, 21, 22, 23, 24, 27}));
  const auto xy = op("x*y");
  EXPECT_EQ(prime_set(xy, 1, 20, default_bounds(xy, 1, 20)).explicit_elements(),
            (std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19}));
}

TEST(GenPrime, PartitionAndDeterminism) {
  const auto sq = op("x^2+y^2");
  const auto b = default_bounds(sq, 1, 300);
  const auto a = sieve(sq, 1, 300, b, Semantics::top(), 1);
  const auto c = sieve(sq, 1, 300, b, Semantics::top(), 4);
  ASSERT_EQ(a.entries.size(), 300u);
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    EXPECT_EQ(a.entries[i].verdict, c.entries[i].verdict);
    EXPECT_EQ(a.entries[i].witness.has_value(), c.entries[i].witness.has_value());
    if (a.entries[i].witness) {
      EXPECT_EQ(a.entries[i].witness->to_string(), c.entries[i].witness->to_string());
    }
  }
}

TEST(GenPrime, LargerBoundsNeverFlipPrimeAndUnit) {
  const auto pw = op("x^y");
  auto small = default_bounds(pw, 1, 28);
  auto large = small;
  large.radius *= 4;
  large.span_hi *= 2;
  const auto a = sieve(pw, 1, 28, small);
  const auto b = sieve(pw, 1, 28, large);
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    const auto x = a.entries[i].verdict, y = b.entries[i].verdict;
    EXPECT_FALSE(x == Verdict::Prime && y == Verdict::Unit);
    EXPECT_FALSE(x == Verdict::Unit && y == Verdict::Prime);
  }
}

TEST(GenPrime, SemanticsParse) {
  EXPECT_EQ(Semantics::parse("top"), Semantics::top());
  EXPECT_EQ(Semantics::parse("deep:3"), Semantics::deep(3));
  EXPECT_THROW(Semantics::parse("deep"), std::exception);
}

}  // namespace
}  // namespace nt
