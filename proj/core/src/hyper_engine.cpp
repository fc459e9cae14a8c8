#include "nt/hyper_engine.hpp"

#include <vector>

namespace nt {

namespace {

BigInt fold_copies(std::uint64_t n, int level, const std::vector<std::int64_t>& supers, const BigInt& x,
                   const EvalLimits& limits) {
  std::vector<int> levels(supers.size(), level);
  return structure_fold<BigInt>(
      static_cast<std::size_t>(n), levels, supers, [&](std::size_t) { return x; },
      [&](int lv, BigInt&& a, BigInt&& b) { return hyper_binary(lv, a, b, limits); });
}

BigInt leaf_value(const std::string& atom, const std::map<std::string, BigInt>& binding) {
  if (auto v = parse_bigint(atom)) return *v;
  auto it = binding.find(atom);
  if (it == binding.end()) throw std::out_of_range("unbound symbol '" + atom + "'");
  return it->second;
}

}  // namespace

BigInt hyper_binary(int level, const BigInt& a, const BigInt& b, const EvalLimits& limits) {
  switch (level) {
    case 0: return a + b;
    case 1:
      if (bit_length(a) + bit_length(b) > limits.max_bits + 1) throw TooLarge("product exceeds bit budget");
      return a * b;
    case 2: return checked_pow(b, a, limits);
    default:
      if (a < 1) throw DomainError("copy count must be positive, got " + a.get_str());
      if (a > limits.max_operand_count) throw TooLarge("copy count " + a.get_str() + " exceeds operand limit");
      return hyper_eval(a.get_ui(), level, OrderSpec::right(), b, limits);
  }
}

BigInt hyper_eval(std::uint64_t n, int level, const OrderSpec& order, const BigInt& x, const EvalLimits& limits) {
  if (n < 1) throw DomainError("copy count must be positive");
  if (level < 0) throw DomainError("level must be non-negative");
  if (level == 0) return BigInt(static_cast<unsigned long>(n)) + x;
  if (n > limits.max_operand_count) throw TooLarge("copy count exceeds operand limit");
  return fold_copies(n, level - 1, order.supers_for(static_cast<std::size_t>(n)), x, limits);
}

BigInt eval_formula(const HyperFormula& formula, const std::map<std::string, BigInt>& binding,
                    const EvalLimits& limits) {
  if (formula.is_leaf()) return leaf_value(formula.atom, binding);
  BigInt a = eval_formula(*formula.left, binding, limits);
  BigInt b = eval_formula(*formula.right, binding, limits);
  return hyper_binary(formula.level, a, b, limits);
}

BigInt eval_flat(const FlatForm& flat, const std::map<std::string, BigInt>& binding, const EvalLimits& limits) {
  return structure_fold<BigInt>(
      flat.operands.size(), flat.levels, flat.supers,
      [&](std::size_t k) { return leaf_value(flat.operands[k], binding); },
      [&](int lv, BigInt&& a, BigInt&& b) { return hyper_binary(lv, a, b, limits); });
}

int zero_tower(std::uint64_t n) {
  BigInt v = hyper_eval(n, 3, OrderSpec::right(), BigInt(0));
  return static_cast<int>(v.get_si());
}

FlatForm distrib_rhs_form(int i, std::uint64_t n) {
  if (i < 1) throw DomainError("distributivity needs level >= 1");
  if (n < 1) throw DomainError("copy count must be positive");
  FlatForm f;
  for (std::uint64_t k = 0; k < n; ++k) f.operands.emplace_back("x");
  for (std::uint64_t k = 0; k < n; ++k) f.operands.emplace_back("y");
  const auto m = static_cast<std::int64_t>(n);
  for (std::int64_t s = 2 * m - 2; s >= 2; s -= 2) f.supers.push_back(s);
  f.supers.push_back(0);
  for (std::int64_t s = 1; s <= 2 * m - 3; s += 2) f.supers.push_back(s);
  f.levels.assign(f.supers.size(), i - 1);
  return f;
}

DistribResult distrib_check(int i, std::uint64_t n, const BigInt& x, const BigInt& y, const EvalLimits& limits) {
  DistribResult r;
  const BigInt inner = hyper_binary(i - 1, x, y, limits);
  r.lhs = hyper_eval(n, i, OrderSpec::right(), inner, limits);
  r.rhs = eval_flat(distrib_rhs_form(i, n), {{"x", x}, {"y", y}}, limits);
  r.equal = r.lhs == r.rhs;
  return r;
}

}  // namespace nt
