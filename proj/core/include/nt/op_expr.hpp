#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nt/bigint.hpp"

namespace nt {

/// Parse failure with the byte offset where it was detected.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// ---------------------------------------------------------------------------
// Domains

class DomainSpec {
 public:
  enum class Tag { N1, N0, Z, ZWindow, Explicit };

  static DomainSpec naturals() { return DomainSpec(Tag::N1); }
  static DomainSpec naturals0() { return DomainSpec(Tag::N0); }
  static DomainSpec integers() { return DomainSpec(Tag::Z); }
  static DomainSpec window(std::int64_t lo, std::int64_t hi);
  /// Sorts and deduplicates.
  static DomainSpec explicit_set(std::vector<std::int64_t> elements);
  /// `n1`, `n0`, `z`, `z:<lo>..<hi>`; `set:<file>` is resolved by the caller.
  static DomainSpec parse(std::string_view text);

  Tag tag() const { return tag_; }
  bool finite() const { return tag_ == Tag::ZWindow || tag_ == Tag::Explicit; }
  bool contains(std::int64_t v) const;
  bool contains(const BigInt& v) const;
  /// Smallest element, if bounded below.
  std::optional<std::int64_t> min() const;
  std::optional<std::int64_t> max() const;
  /// Elements within [lo, hi], ascending.
  std::vector<std::int64_t> elements_in(std::int64_t lo, std::int64_t hi) const;
  const std::vector<std::int64_t>& explicit_elements() const { return elements_; }
  std::string to_string() const;

  bool operator==(const DomainSpec&) const = default;

 private:
  explicit DomainSpec(Tag t) : tag_(t) {}
  Tag tag_;
  std::int64_t lo_ = 0;
  std::int64_t hi_ = 0;
  std::vector<std::int64_t> elements_;
};

// ---------------------------------------------------------------------------
// Expression tree

struct OpExprNode;
using OpExprPtr = std::shared_ptr<const OpExprNode>;

struct OpExprNode {
  enum class Kind { Literal, Param, Var, Neg, Abs, Add, Sub, Mul, Pow, Div, Root, Log };
  Kind kind;
  BigInt literal;      // Literal
  std::string name;    // Param
  int var = 0;         // Var (1-based)
  OpExprPtr lhs;       // unary operand / left operand
  OpExprPtr rhs;       // right operand, root degree, log base
};

/// An n-ary partial operation f(x1..xn) over a domain.
struct OpSpec {
  std::string name;  // source text as given
  int arity = 2;
  OpExprPtr body;
  std::map<std::string, BigInt> params;
  DomainSpec domain = DomainSpec::naturals();
};

/// Parses the operation DSL. Grammar (EBNF):
///
///   expr    = term { ("+" | "-") term } ;
///   term    = unary { ("*" | "/") unary } ;
///   unary   = "-" unary | power ;
///   power   = primary [ "^" unary ] ;
///   primary = integer | variable | param | "(" expr ")"
///           | "abs" "(" expr ")" | "root" "(" expr "," expr ")"
///           | "log" "(" expr "," expr ")" ;
///   variable = "x" | "y" | "z" | "x" digits ;
///
/// `/` is exact division, `root(e,n)` the exact n-th root, `log(e,b)` the
/// exact base-b logarithm; each is undefined when inexact.
OpSpec parse_op_expr(std::string_view text, int arity,
                     const std::map<std::string, BigInt>& params = {},
                     DomainSpec domain = DomainSpec::naturals());

/// Canonical text with minimal parentheses; parse_op_expr(print_op_expr(e))
/// yields a structurally equal tree.
std::string print_op_expr(const OpExprPtr& e);
inline std::string print_op(const OpSpec& op) { return print_op_expr(op.body); }

bool structurally_equal(const OpExprPtr& a, const OpExprPtr& b);

/// Largest variable index used in the expression (0 when none).
int max_var_index(const OpExprPtr& e);

/// f(args) when defined and inside op.domain; nullopt otherwise. Arguments
/// outside the domain also yield nullopt. Throws TooLarge past limits.
std::optional<BigInt> eval_op(const OpSpec& op, std::span<const BigInt> args,
                              const EvalLimits& limits = {});
std::optional<BigInt> eval_op(const OpSpec& op, std::initializer_list<std::int64_t> args,
                              const EvalLimits& limits = {});

/// Evaluates the raw integer expression without any domain restriction
/// (still partial for inexact quotients/roots/logs and negative exponents).
std::optional<BigInt> eval_raw(const OpSpec& op, std::span<const BigInt> args,
                               const EvalLimits& limits = {});

// ---------------------------------------------------------------------------
// Static analysis

struct OpTraits {
  /// Nondecreasing in every argument over the op's domain (N0/N1 only).
  bool monotone = false;
  /// Polynomial degree per variable (index 0 = x1); -1 when the variable
  /// occurs under a non-polynomial construct.
  std::vector<int> degree;
  /// Whether variable j (0-based) occurs at all.
  std::vector<bool> uses;

  bool affine_in(int j) const { return degree[j] == 0 || degree[j] == 1; }
};

OpTraits analyze(const OpSpec& op);

// ---------------------------------------------------------------------------
// Compiled evaluator for search loops

/// Stack-machine form of an OpSpec. Evaluates in checked 64-bit arithmetic
/// and falls back to exact big integers on overflow. Not thread-safe: keep
/// one instance per worker.
class Evaluator {
 public:
  explicit Evaluator(const OpSpec& op, EvalLimits limits = {});

  enum class Status { Value, Undefined, Huge, TooLarge };
  struct Result {
    Status status;
    std::int64_t value;  // valid when status == Value
  };

  /// Value when defined, in the domain and representable in 64 bits;
  /// Huge when defined and in the domain but outside int64.
  Result eval(std::span<const std::int64_t> args);
  /// As eval() but without domain checks on the arguments or the result.
  Result eval_raw(std::span<const std::int64_t> args);

  /// Exact evaluation with domain checks.
  std::optional<BigInt> eval_big(std::span<const BigInt> args);

  const OpSpec& op() const { return *op_; }
  int arity() const { return op_->arity; }

 private:
  enum class Code : std::uint8_t { Const, Var, Neg, Abs, Add, Sub, Mul, Pow, Div, Root, Log };
  struct Instr {
    Code code;
    int var;
    std::int64_t imm;
    bool imm_big;  // constant does not fit int64
    BigInt big;
  };

  Result run_small(std::span<const std::int64_t> args, bool& overflow);
  Result run_big(std::span<const BigInt> args);

  std::shared_ptr<const OpSpec> op_;
  EvalLimits limits_;
  std::vector<Instr> code_;
  std::vector<std::int64_t> stack_;
  std::vector<BigInt> big_stack_;
  std::vector<BigInt> big_args_;
};

}  // namespace nt
