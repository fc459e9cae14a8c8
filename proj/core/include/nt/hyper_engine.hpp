#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "nt/bigint.hpp"
#include "nt/hyper_formula.hpp"

namespace nt {

/// Binary hyperoperation A o_level B under the suffix convention:
/// level 0 is A + B, level 1 is A * B, level 2 is B^A (0^0 = 1), and for
/// level >= 3, A o_level B is (A) o_level^-> B, A being a copy count.
BigInt hyper_binary(int level, const BigInt& a, const BigInt& b, const EvalLimits& limits = {});

/// (n) o_i^[S] x: n copies of x composed under level i-1 in the order
/// given by `order`. Level 0 returns n + x.
BigInt hyper_eval(std::uint64_t n, int level, const OrderSpec& order, const BigInt& x,
                  const EvalLimits& limits = {});

/// Evaluates a tree. Integer leaves stand for themselves; symbol leaves are
/// looked up in `binding` (std::out_of_range when unbound).
BigInt eval_formula(const HyperFormula& formula, const std::map<std::string, BigInt>& binding,
                    const EvalLimits& limits = {});
/// Same for the flat form, structured without building a tree.
BigInt eval_flat(const FlatForm& flat, const std::map<std::string, BigInt>& binding,
                 const EvalLimits& limits = {});

/// (n) o_3^-> 0 by literal tower evaluation.
int zero_tower(std::uint64_t n);

struct DistribResult {
  BigInt lhs;
  BigInt rhs;
  bool equal = false;
};

/// lhs = (n) o_i^-> (x o_{i-1} y);
/// rhs = n copies of x then n copies of y at level i-1 with superscripts
/// [2n-2,...,2] ++ [0] ++ [1,3,...,2n-3].
DistribResult distrib_check(int i, std::uint64_t n, const BigInt& x, const BigInt& y,
                            const EvalLimits& limits = {});
/// The right-hand side flat form used by distrib_check, with operands named x and y.
FlatForm distrib_rhs_form(int i, std::uint64_t n);

}  // namespace nt
