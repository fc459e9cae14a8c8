#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nt {

/// A superscript sequence cannot be turned into a single tree: either the
/// lengths disagree or two equal superscripts become adjacent, so that
/// left-to-right and right-to-left application would build different trees.
class Ambiguous : public std::runtime_error {
 public:
  explicit Ambiguous(const std::string& what) : std::runtime_error(what) {}
};

/// Parenthesized hyperoperation formula: a leaf (symbol or decimal integer)
/// or apply(level, left, right).
struct HyperFormula {
  std::string atom;  // meaningful for leaves only
  int level = 0;
  std::shared_ptr<const HyperFormula> left;
  std::shared_ptr<const HyperFormula> right;

  static HyperFormula leaf(std::string atom);
  static HyperFormula apply(int level, HyperFormula lhs, HyperFormula rhs);

  bool is_leaf() const { return left == nullptr; }
  std::size_t operand_count() const;
  bool operator==(const HyperFormula& other) const;
};

/// Bracket-free form: operands joined by operators, each operator carrying a
/// level and a superscript giving its application order.
struct FlatForm {
  std::vector<std::string> operands;
  std::vector<int> levels;
  std::vector<std::int64_t> supers;

  bool operator==(const FlatForm&) const = default;
};

enum class OrderKind { ArrowRight, ArrowLeft, Explicit };

struct OrderSpec {
  OrderKind kind = OrderKind::ArrowRight;
  std::vector<std::int64_t> explicit_supers;

  static OrderSpec right() { return {OrderKind::ArrowRight, {}}; }
  static OrderSpec left() { return {OrderKind::ArrowLeft, {}}; }
  static OrderSpec explicit_order(std::vector<std::int64_t> s) { return {OrderKind::Explicit, std::move(s)}; }
  /// `->`, `<-` or `[s1,s2,...]`.
  static OrderSpec parse(std::string_view text);

  /// Superscripts for `count` operands (count - 1 entries).
  std::vector<std::int64_t> supers_for(std::size_t count) const;
  std::string to_string() const;
};

/// Assigns superscripts bottom-up: each application gets 1 + the largest
/// superscript already present in its operands (0 when there is none).
FlatForm flatten(const HyperFormula& formula);

/// Applies operators in ascending superscript order, ties left to right.
/// Throws Ambiguous for malformed or order-dependent sequences.
HyperFormula structure(const FlatForm& flat);

/// Generic structuring fold shared by structure() and the evaluator:
/// `leaf(k)` builds operand k, `combine(level, lhs, rhs)` one application.
template <typename T, typename Leaf, typename Combine>
T structure_fold(std::size_t operand_count, const std::vector<int>& levels,
                 const std::vector<std::int64_t>& supers, Leaf&& leaf, Combine&& combine) {
  if (operand_count == 0) throw Ambiguous("no operands");
  if (supers.size() + 1 != operand_count || levels.size() != supers.size()) {
    throw Ambiguous("superscript count must be operand count - 1");
  }
  const std::size_t ops = supers.size();
  std::vector<T> seg;
  seg.reserve(operand_count);
  for (std::size_t k = 0; k < operand_count; ++k) seg.push_back(leaf(k));
  if (ops == 0) return std::move(seg[0]);

  // Alive operators as a doubly linked list; `none` marks the ends.
  const std::size_t none = ops;
  std::vector<std::size_t> prev(ops), next(ops);
  for (std::size_t i = 0; i < ops; ++i) {
    prev[i] = i == 0 ? none : i - 1;
    next[i] = i + 1 == ops ? none : i + 1;
  }
  std::vector<std::size_t> order(ops);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return supers[a] < supers[b]; });

  std::size_t g = 0;
  while (g < ops) {
    std::size_t h = g;
    while (h < ops && supers[order[h]] == supers[order[g]]) ++h;
    for (std::size_t t = g; t < h; ++t) {
      const std::size_t i = order[t];
      if (next[i] != none && supers[next[i]] == supers[i]) {
        throw Ambiguous("adjacent operators share superscript " + std::to_string(supers[i]));
      }
    }
    for (std::size_t t = g; t < h; ++t) {
      const std::size_t i = order[t];
      const std::size_t lrep = prev[i] == none ? 0 : prev[i] + 1;
      seg[lrep] = combine(levels[i], std::move(seg[lrep]), std::move(seg[i + 1]));
      if (prev[i] != none) next[prev[i]] = next[i];
      if (next[i] != none) prev[next[i]] = prev[i];
    }
    g = h;
  }
  return std::move(seg[0]);
}

/// Text form. Operators are `o<i>` (or `o[<i>]`) with an optional `^<s>`
/// superscript; `N o<i>^[s1,...] a` (also `^->`, `^<-`) expands to N copies
/// of atom `a` joined by level i-1 operators. Parentheses group; within one
/// group at most one operator may omit its superscript, and it receives
/// 1 + the largest superscript of the group.
FlatForm parse_hyper(std::string_view text);
std::string print_hyper(const FlatForm& flat);
/// Fully parenthesized, superscript-free rendering.
std::string print_hyper(const HyperFormula& formula);

}  // namespace nt
