#include <gtest/gtest.h>

#include <algorithm>

#include "nt/dioph.hpp"

namespace nt {
namespace {

OpSpec op(const char* text, int arity, DomainSpec d = DomainSpec::naturals()) { return parse_op_expr(text, arity, {}, d); }

TEST(Dioph, SolvePythagorean) {
  const auto sols = solve_box(op("x^2+y^2", 2), op("x^2", 1), SolutionBox::cube(3, 1, 20));
  const auto it = std::find_if(sols.begin(), sols.end(), [](const SolutionRecord& s) {
    return s.x == std::vector<std::int64_t>{3, 4} && s.y == std::vector<std::int64_t>{5};
  });
  ASSERT_NE(it, sols.end());
  EXPECT_EQ(it->value, 25);
  EXPECT_TRUE(it->nowhere_trivial());
}

TEST(Dioph, SolveCubesEmpty) {
  EXPECT_TRUE(solve_box(op("x^3+y^3", 2), op("x^3", 1), SolutionBox::cube(3, 1, 50)).empty());
}

TEST(Dioph, SolveAddition) {
  const auto sols = solve_box(op("x+y", 2), op("x", 1), SolutionBox::cube(3, 1, 3));
  ASSERT_EQ(sols.size(), 3u);
  EXPECT_EQ(sols[0].x, (std::vector<std::int64_t>{1, 1}));
  EXPECT_EQ(sols[0].y, (std::vector<std::int64_t>{2}));
  EXPECT_EQ(sols[1].x, (std::vector<std::int64_t>{1, 2}));
  EXPECT_EQ(sols[2].x, (std::vector<std::int64_t>{2, 1}));
}

TEST(Dioph, SolveIsDeterministicAcrossJobs) {
  const auto a = solve_box(op("x^2+y^2", 2), op("x^2", 1), SolutionBox::cube(3, 1, 40), 1);
  const auto b = solve_box(op("x^2+y^2", 2), op("x^2", 1), SolutionBox::cube(3, 1, 40), 3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(a[i].x == b[i].x && a[i].y == b[i].y);
}

TEST(Dioph, Triviality) {
  const auto r = op("root(x^6+y^3,6)", 2, DomainSpec::naturals0());
  const std::vector<std::int64_t> sol{5, 0};
  EXPECT_TRUE(is_trivial_in(r, sol, 1, default_bounds(r, 0, 32)).value);
  const auto cubes = op("x^3+y^3", 2, DomainSpec::integers());
  for (std::int64_t x : {-3, 0, 1, 4}) {
    const std::vector<std::int64_t> s{x, 1};
    EXPECT_FALSE(is_trivial_in(cubes, s, 0, default_bounds(cubes, 0, 0)).value) << x;
  }
}

std::vector<std::int64_t> values(const std::vector<IntersectionEntry>& v) {
  std::vector<std::int64_t> out;
  for (const auto& e : v) out.push_back(e.value);
  return out;
}

TEST(Dioph, Intersection) {
  const auto sq = op("x^2+y^2", 2), z2 = op("x^2", 1);
  const auto a = composite_intersection(sq, z2, 1, 100, default_bounds(sq, 1, 100), default_bounds(z2, 1, 100));
  const auto vs = values(a);
  ASSERT_NE(std::find(vs.begin(), vs.end(), 25), vs.end());
  const auto e25 = *std::find_if(a.begin(), a.end(), [](const auto& e) { return e.value == 25; });
  EXPECT_EQ(e25.f_args, (std::vector<std::int64_t>{3, 4}));
  EXPECT_EQ(e25.g_args, (std::vector<std::int64_t>{5}));

  const auto cu = op("x^3+y^3", 2), z3 = op("x^3", 1);
  EXPECT_TRUE(composite_intersection(cu, z3, 1, 10000, default_bounds(cu, 1, 10000), default_bounds(z3, 1, 10000))
                  .empty());

  const auto xy = op("x*y", 2), add = op("x+y", 2);
  const auto c = values(composite_intersection(xy, add, 1, 10, default_bounds(xy, 1, 10), default_bounds(add, 1, 10)));
  EXPECT_NE(std::find(c.begin(), c.end(), 4), c.end());
}

TEST(Dioph, Cover) {
  const auto cu = op("x^3+y^3", 2), z3 = op("x^3", 1);
  EXPECT_TRUE(prime_cover_check(cu, z3, 1, 10000, default_bounds(cu, 1, 10000), default_bounds(z3, 1, 10000)).covered);
  const auto sq = op("x^2+y^2", 2), z2 = op("x^2", 1);
  const auto r = prime_cover_check(sq, z2, 1, 100, default_bounds(sq, 1, 100), default_bounds(z2, 1, 100));
  EXPECT_FALSE(r.covered);
  EXPECT_NE(std::find(r.exceptions.begin(), r.exceptions.end(), 25), r.exceptions.end());
  EXPECT_TRUE(r.consistent);
  const auto xy = op("x*y", 2);
  EXPECT_TRUE(prime_cover_check(xy, xy, 1, 1, default_bounds(xy, 1, 1), default_bounds(xy, 1, 1)).covered);
}

TEST(Dioph, Representable) {
  const auto four = op("x1^2+x2^2+x3^2+x4^2", 4, DomainSpec::naturals0());
  EXPECT_EQ(representable(four, 7, default_bounds(four, 7, 7)), (std::vector<std::int64_t>{1, 1, 1, 2}));
  const auto sq = op("x^2+y^2", 2);
  EXPECT_FALSE(representable(sq, 3, default_bounds(sq, 3, 3)).has_value());
  const auto add = op("x+y", 2);
  EXPECT_EQ(representable(add, 2, default_bounds(add, 2, 2)), (std::vector<std::int64_t>{1, 1}));
}

TEST(Dioph, LagrangeScan) {
  const auto four = op("x1^2+x2^2+x3^2+x4^2", 4, DomainSpec::naturals0());
  const auto reps = representable_range(four, 1, 2000, default_bounds(four, 1, 2000));
  for (std::size_t i = 0; i < reps.size(); ++i) EXPECT_TRUE(reps[i].has_value()) << i + 1;
}

TEST(Dioph, GoldbachVariant) {
  const auto sq = op("x^2+y^2", 2);
  const auto base = prime_set(sq, 1, 10000, default_bounds(sq, 1, 10000)).explicit_elements();
  EXPECT_TRUE(cover_scan(base, op("x+y", 2), 4, 10000).empty());
}

TEST(Dioph, ClassicalGoldbach) {
  const auto xy = op("x*y", 2);
  const auto base = prime_set(xy, 1, 10000, default_bounds(xy, 1, 10000)).explicit_elements();
  for (auto n : cover_scan(base, op("x+y", 2), 4, 10000)) EXPECT_NE(n % 2, 0) << n;
}

TEST(Dioph, CoverScanTrivial) {
  EXPECT_EQ(cover_scan({1}, op("x+y", 2), 2, 5), (std::vector<std::int64_t>{3, 4, 5}));
}

}  // namespace
}  // namespace nt
