#include "nt/op_expr.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace nt {

// ---------------------------------------------------------------------------
// DomainSpec

DomainSpec DomainSpec::window(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw DomainError("empty Z-window");
  DomainSpec d(Tag::ZWindow);
  d.lo_ = lo;
  d.hi_ = hi;
  return d;
}

DomainSpec DomainSpec::explicit_set(std::vector<std::int64_t> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty()) throw DomainError("empty explicit set");
  DomainSpec d(Tag::Explicit);
  d.lo_ = elements.front();
  d.hi_ = elements.back();
  d.elements_ = std::move(elements);
  return d;
}

DomainSpec DomainSpec::parse(std::string_view text) {
  if (text == "n1" || text == "N1" || text == "n") return naturals();
  if (text == "n0" || text == "N0") return naturals0();
  if (text == "z" || text == "Z") return integers();
  if (text.size() > 2 && (text.substr(0, 2) == "z:" || text.substr(0, 2) == "Z:")) {
    auto body = text.substr(2);
    auto dots = body.find("..");
    if (dots == std::string_view::npos) throw DomainError("expected z:<lo>..<hi>");
    auto lo = parse_bigint(body.substr(0, dots));
    auto hi = parse_bigint(body.substr(dots + 2));
    if (!lo || !hi || !fits_int64(*lo) || !fits_int64(*hi)) {
      throw DomainError("bad window bounds in '" + std::string(text) + "'");
    }
    return window(to_int64(*lo), to_int64(*hi));
  }
  throw DomainError("unknown domain '" + std::string(text) + "'");
}

bool DomainSpec::contains(std::int64_t v) const {
  switch (tag_) {
    case Tag::N1: return v >= 1;
    case Tag::N0: return v >= 0;
    case Tag::Z: return true;
    case Tag::ZWindow: return v >= lo_ && v <= hi_;
    case Tag::Explicit: return std::binary_search(elements_.begin(), elements_.end(), v);
  }
  return false;
}

bool DomainSpec::contains(const BigInt& v) const {
  if (fits_int64(v)) return contains(to_int64(v));
  switch (tag_) {
    case Tag::N1:
    case Tag::N0: return v > 0;
    case Tag::Z: return true;
    default: return false;
  }
}

std::optional<std::int64_t> DomainSpec::min() const {
  switch (tag_) {
    case Tag::N1: return 1;
    case Tag::N0: return 0;
    case Tag::Z: return std::nullopt;
    case Tag::ZWindow:
    case Tag::Explicit: return lo_;
  }
  return std::nullopt;
}

std::optional<std::int64_t> DomainSpec::max() const {
  if (finite()) return hi_;
  return std::nullopt;
}

std::vector<std::int64_t> DomainSpec::elements_in(std::int64_t lo, std::int64_t hi) const {
  std::vector<std::int64_t> out;
  if (lo > hi) return out;
  if (tag_ == Tag::Explicit) {
    auto first = std::lower_bound(elements_.begin(), elements_.end(), lo);
    auto last = std::upper_bound(elements_.begin(), elements_.end(), hi);
    out.assign(first, last);
    return out;
  }
  std::int64_t a = lo;
  std::int64_t b = hi;
  if (auto m = min()) a = std::max(a, *m);
  if (auto m = max()) b = std::min(b, *m);
  if (a > b) return out;
  out.reserve(static_cast<std::size_t>(b - a + 1));
  for (std::int64_t v = a;; ++v) {
    out.push_back(v);
    if (v == b) break;
  }
  return out;
}

std::string DomainSpec::to_string() const {
  switch (tag_) {
    case Tag::N1: return "n1";
    case Tag::N0: return "n0";
    case Tag::Z: return "z";
    case Tag::ZWindow: return "z:" + std::to_string(lo_) + ".." + std::to_string(hi_);
    case Tag::Explicit:
      return "set[" + std::to_string(elements_.size()) + "]";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Parser

namespace {

using Kind = OpExprNode::Kind;

OpExprPtr make_node(Kind k, OpExprPtr lhs = nullptr, OpExprPtr rhs = nullptr) {
  auto n = std::make_shared<OpExprNode>();
  n->kind = k;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
 public:
  Parser(std::string_view text, int arity, const std::map<std::string, BigInt>& params)
      : text_(text), arity_(arity), params_(params) {}

  OpExprPtr parse() {
    auto e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  OpExprPtr expr() {
    auto lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = make_node(Kind::Add, lhs, term());
      } else if (accept('-')) {
        lhs = make_node(Kind::Sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  OpExprPtr term() {
    auto lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = make_node(Kind::Mul, lhs, unary());
      } else if (accept('/')) {
        lhs = make_node(Kind::Div, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  OpExprPtr unary() {
    if (accept('-')) return make_node(Kind::Neg, unary());
    return power();
  }

  OpExprPtr power() {
    auto base = primary();
    if (accept('^')) return make_node(Kind::Pow, base, unary());
    return base;
  }

  OpExprPtr primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      auto n = make_node(Kind::Literal);
      auto mut = std::const_pointer_cast<OpExprNode>(n);
      mut->literal = BigInt(std::string(text_.substr(start, pos_ - start)));
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string ident(text_.substr(start, pos_ - start));
      skip_ws();
      const bool call = pos_ < text_.size() && text_[pos_] == '(';
      if (call && (ident == "abs" || ident == "root" || ident == "log")) {
        ++pos_;
        auto a = expr();
        if (ident == "abs") {
          expect(')');
          return make_node(Kind::Abs, a);
        }
        expect(',');
        auto b = expr();
        expect(')');
        return make_node(ident == "root" ? Kind::Root : Kind::Log, a, b);
      }
      return identifier(ident, start);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  OpExprPtr identifier(const std::string& ident, std::size_t start) {
    int var = 0;
    if (ident == "x") var = 1;
    if (ident == "y") var = 2;
    if (ident == "z") var = 3;
    if (var == 0 && ident.size() > 1 && ident[0] == 'x' &&
        std::all_of(ident.begin() + 1, ident.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      if (ident.size() > 6) throw SyntaxError("variable index too large in '" + ident + "'", start);
      var = std::stoi(ident.substr(1));
      if (var == 0) throw SyntaxError("variables are numbered from x1", start);
    }
    if (var > 0) {
      if (var > arity_) {
        throw SyntaxError("variable '" + ident + "' exceeds arity " + std::to_string(arity_), start);
      }
      auto n = make_node(Kind::Var);
      std::const_pointer_cast<OpExprNode>(n)->var = var;
      return n;
    }
    if (params_.find(ident) == params_.end()) {
      throw SyntaxError("unbound parameter '" + ident + "'", start);
    }
    auto n = make_node(Kind::Param);
    std::const_pointer_cast<OpExprNode>(n)->name = ident;
    return n;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int arity_;
  const std::map<std::string, BigInt>& params_;
};

int precedence(const OpExprNode& n) {
  switch (n.kind) {
    case Kind::Add:
    case Kind::Sub: return 1;
    case Kind::Mul:
    case Kind::Div: return 2;
    case Kind::Neg: return 3;
    case Kind::Pow: return 4;
    default: return 5;
  }
}

void print_into(const OpExprPtr& e, int min_prec, std::string& out) {
  const bool paren = precedence(*e) < min_prec;
  if (paren) out += '(';
  switch (e->kind) {
    case Kind::Literal: out += e->literal.get_str(); break;
    case Kind::Param: out += e->name; break;
    case Kind::Var:
      if (e->var == 1) out += 'x';
      else if (e->var == 2) out += 'y';
      else if (e->var == 3) out += 'z';
      else out += "x" + std::to_string(e->var);
      break;
    case Kind::Neg:
      out += '-';
      print_into(e->lhs, 3, out);
      break;
    case Kind::Abs:
    case Kind::Root:
    case Kind::Log:
      out += e->kind == Kind::Abs ? "abs(" : e->kind == Kind::Root ? "root(" : "log(";
      print_into(e->lhs, 0, out);
      if (e->kind != Kind::Abs) {
        out += ',';
        print_into(e->rhs, 0, out);
      }
      out += ')';
      break;
    case Kind::Add:
    case Kind::Sub:
      print_into(e->lhs, 1, out);
      out += e->kind == Kind::Add ? '+' : '-';
      print_into(e->rhs, 2, out);
      break;
    case Kind::Mul:
    case Kind::Div:
      print_into(e->lhs, 2, out);
      out += e->kind == Kind::Mul ? '*' : '/';
      print_into(e->rhs, 3, out);
      break;
    case Kind::Pow:
      print_into(e->lhs, 5, out);
      out += '^';
      print_into(e->rhs, 3, out);
      break;
  }
  if (paren) out += ')';
}

bool uses_any_var(const OpExprPtr& e) {
  if (!e) return false;
  if (e->kind == Kind::Var) return true;
  return uses_any_var(e->lhs) || uses_any_var(e->rhs);
}

bool uses_var(const OpExprPtr& e, int var) {
  if (!e) return false;
  if (e->kind == Kind::Var) return e->var == var;
  return uses_var(e->lhs, var) || uses_var(e->rhs, var);
}

std::optional<BigInt> eval_node(const OpExprPtr& e, const std::map<std::string, BigInt>& params,
                                std::span<const BigInt> args, const EvalLimits& limits) {
  switch (e->kind) {
    case Kind::Literal: return e->literal;
    case Kind::Param: return params.at(e->name);
    case Kind::Var: return args[static_cast<std::size_t>(e->var - 1)];
    default: break;
  }
  auto a = eval_node(e->lhs, params, args, limits);
  if (!a) return std::nullopt;
  switch (e->kind) {
    case Kind::Neg: return BigInt(-*a);
    case Kind::Abs: return BigInt(abs(*a));
    default: break;
  }
  auto b = eval_node(e->rhs, params, args, limits);
  if (!b) return std::nullopt;
  switch (e->kind) {
    case Kind::Add: return BigInt(*a + *b);
    case Kind::Sub: return BigInt(*a - *b);
    case Kind::Mul: {
      if (bit_length(*a) + bit_length(*b) > limits.max_bits + 1) {
        throw TooLarge("product exceeds bit budget");
      }
      return BigInt(*a * *b);
    }
    case Kind::Pow:
      if (*b < 0) return std::nullopt;
      return checked_pow(*a, *b, limits);
    case Kind::Div: {
      if (*b == 0) return std::nullopt;
      if (mpz_divisible_p(a->get_mpz_t(), b->get_mpz_t()) == 0) return std::nullopt;
      BigInt q;
      mpz_divexact(q.get_mpz_t(), a->get_mpz_t(), b->get_mpz_t());
      return q;
    }
    case Kind::Root:
      if (*b <= 0 || !mpz_fits_ulong_p(b->get_mpz_t())) return std::nullopt;
      return exact_root(*a, b->get_ui());
    case Kind::Log: return exact_log(*a, *b);
    default: return std::nullopt;
  }
}

}  // namespace

OpSpec parse_op_expr(std::string_view text, int arity, const std::map<std::string, BigInt>& params,
                     DomainSpec domain) {
  if (arity < 1) throw SyntaxError("arity must be positive", 0);
  Parser p(text, arity, params);
  OpSpec op;
  op.name = std::string(text);
  op.arity = arity;
  op.body = p.parse();
  op.params = params;
  op.domain = std::move(domain);
  return op;
}

std::string print_op_expr(const OpExprPtr& e) {
  std::string out;
  print_into(e, 0, out);
  return out;
}

bool structurally_equal(const OpExprPtr& a, const OpExprPtr& b) {
  if (!a || !b) return !a && !b;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::Literal: return a->literal == b->literal;
    case Kind::Param: return a->name == b->name;
    case Kind::Var: return a->var == b->var;
    default: return structurally_equal(a->lhs, b->lhs) && structurally_equal(a->rhs, b->rhs);
  }
}

int max_var_index(const OpExprPtr& e) {
  if (!e) return 0;
  if (e->kind == Kind::Var) return e->var;
  return std::max(max_var_index(e->lhs), max_var_index(e->rhs));
}

std::optional<BigInt> eval_raw(const OpSpec& op, std::span<const BigInt> args, const EvalLimits& limits) {
  if (static_cast<int>(args.size()) != op.arity) {
    throw std::invalid_argument("eval_op: expected " + std::to_string(op.arity) + " arguments");
  }
  return eval_node(op.body, op.params, args, limits);
}

std::optional<BigInt> eval_op(const OpSpec& op, std::span<const BigInt> args, const EvalLimits& limits) {
  if (static_cast<int>(args.size()) != op.arity) {
    throw std::invalid_argument("eval_op: expected " + std::to_string(op.arity) + " arguments");
  }
  for (const auto& a : args) {
    if (!op.domain.contains(a)) return std::nullopt;
  }
  auto v = eval_node(op.body, op.params, args, limits);
  if (!v || !op.domain.contains(*v)) return std::nullopt;
  return v;
}

std::optional<BigInt> eval_op(const OpSpec& op, std::initializer_list<std::int64_t> args,
                              const EvalLimits& limits) {
  std::vector<BigInt> big;
  big.reserve(args.size());
  for (auto a : args) big.push_back(from_int64(a));
  return eval_op(op, big, limits);
}

// ---------------------------------------------------------------------------
// Traits

namespace {

int degree_in(const OpExprPtr& e, int var, const std::map<std::string, BigInt>& params) {
  switch (e->kind) {
    case Kind::Literal:
    case Kind::Param: return 0;
    case Kind::Var: return e->var == var ? 1 : 0;
    case Kind::Neg: return degree_in(e->lhs, var, params);
    case Kind::Add:
    case Kind::Sub: {
      int a = degree_in(e->lhs, var, params);
      int b = degree_in(e->rhs, var, params);
      if (a < 0 || b < 0) return -1;
      return std::max(a, b);
    }
    case Kind::Mul: {
      int a = degree_in(e->lhs, var, params);
      int b = degree_in(e->rhs, var, params);
      if (a < 0 || b < 0) return -1;
      return a + b;
    }
    case Kind::Pow: {
      if (uses_any_var(e->rhs)) {
        return (uses_var(e->lhs, var) || uses_var(e->rhs, var)) ? -1 : 0;
      }
      int a = degree_in(e->lhs, var, params);
      if (a < 0) return -1;
      if (a == 0) return 0;
      auto ex = eval_node(e->rhs, params, {}, EvalLimits{});
      if (!ex || *ex < 0 || *ex > 64) return -1;
      return a * static_cast<int>(ex->get_si());
    }
    default: return uses_var(e, var) ? -1 : 0;
  }
}

bool monotone_node(const OpExprPtr& e, const OpSpec& op, std::span<const BigInt> min_args) {
  switch (e->kind) {
    case Kind::Literal: return e->literal >= 0;
    case Kind::Param: return op.params.at(e->name) >= 0;
    case Kind::Var: return true;
    case Kind::Add:
    case Kind::Mul: return monotone_node(e->lhs, op, min_args) && monotone_node(e->rhs, op, min_args);
    case Kind::Pow: {
      if (!monotone_node(e->lhs, op, min_args) || !monotone_node(e->rhs, op, min_args)) return false;
      if (!uses_any_var(e->rhs)) return true;
      try {
        auto base_min = eval_node(e->lhs, op.params, min_args, EvalLimits{});
        return base_min && *base_min >= 1;
      } catch (const TooLarge&) {
        return false;
      }
    }
    default: return false;
  }
}

}  // namespace

OpTraits analyze(const OpSpec& op) {
  OpTraits t;
  t.degree.resize(static_cast<std::size_t>(op.arity));
  t.uses.resize(static_cast<std::size_t>(op.arity));
  for (int j = 0; j < op.arity; ++j) {
    t.degree[static_cast<std::size_t>(j)] = degree_in(op.body, j + 1, op.params);
    t.uses[static_cast<std::size_t>(j)] = uses_var(op.body, j + 1);
  }
  const auto tag = op.domain.tag();
  if (tag == DomainSpec::Tag::N0 || tag == DomainSpec::Tag::N1) {
    std::vector<BigInt> min_args(static_cast<std::size_t>(op.arity), from_int64(*op.domain.min()));
    t.monotone = monotone_node(op.body, op, min_args);
  }
  return t;
}

// ---------------------------------------------------------------------------
// Evaluator

Evaluator::Evaluator(const OpSpec& op, EvalLimits limits)
    : op_(std::make_shared<const OpSpec>(op)), limits_(limits) {
  // Post-order flattening of the tree.
  std::vector<std::pair<const OpExprNode*, bool>> work{{op_->body.get(), false}};
  while (!work.empty()) {
    auto [n, expanded] = work.back();
    work.pop_back();
    if (!expanded && n->lhs) {
      work.push_back({n, true});
      if (n->rhs) work.push_back({n->rhs.get(), false});
      work.push_back({n->lhs.get(), false});
      continue;
    }
    Instr ins{Code::Const, 0, 0, false, BigInt()};
    switch (n->kind) {
      case Kind::Literal:
      case Kind::Param: {
        const BigInt& v = n->kind == Kind::Literal ? n->literal : op_->params.at(n->name);
        ins.code = Code::Const;
        ins.big = v;
        ins.imm_big = !fits_int64(v);
        ins.imm = ins.imm_big ? 0 : to_int64(v);
        break;
      }
      case Kind::Var: ins.code = Code::Var; ins.var = n->var - 1; break;
      case Kind::Neg: ins.code = Code::Neg; break;
      case Kind::Abs: ins.code = Code::Abs; break;
      case Kind::Add: ins.code = Code::Add; break;
      case Kind::Sub: ins.code = Code::Sub; break;
      case Kind::Mul: ins.code = Code::Mul; break;
      case Kind::Pow: ins.code = Code::Pow; break;
      case Kind::Div: ins.code = Code::Div; break;
      case Kind::Root: ins.code = Code::Root; break;
      case Kind::Log: ins.code = Code::Log; break;
    }
    code_.push_back(std::move(ins));
  }
  stack_.resize(code_.size() + 1);
  big_stack_.resize(code_.size() + 1);
  big_args_.resize(static_cast<std::size_t>(op_->arity));
}

Evaluator::Result Evaluator::run_small(std::span<const std::int64_t> args, bool& overflow) {
  std::size_t sp = 0;
  overflow = false;
  for (const auto& ins : code_) {
    switch (ins.code) {
      case Code::Const:
        if (ins.imm_big) { overflow = true; return {Status::Undefined, 0}; }
        stack_[sp++] = ins.imm;
        break;
      case Code::Var: stack_[sp++] = args[static_cast<std::size_t>(ins.var)]; break;
      case Code::Neg:
      case Code::Abs: {
        auto& v = stack_[sp - 1];
        if (v == std::numeric_limits<std::int64_t>::min()) { overflow = true; return {Status::Undefined, 0}; }
        if (ins.code == Code::Neg || v < 0) v = -v;
        break;
      }
      case Code::Root:
      case Code::Log:
        overflow = true;  // rare; handled exactly by the big path
        return {Status::Undefined, 0};
      default: {
        const std::int64_t b = stack_[--sp];
        std::int64_t& a = stack_[sp - 1];
        bool of = false;
        switch (ins.code) {
          case Code::Add: of = add_overflow(a, b, a); break;
          case Code::Sub: of = sub_overflow(a, b, a); break;
          case Code::Mul: of = mul_overflow(a, b, a); break;
          case Code::Pow:
            if (b < 0) return {Status::Undefined, 0};
            of = pow_overflow(a, b, a);
            break;
          case Code::Div:
            if (b == 0) return {Status::Undefined, 0};
            if (b == -1 && a == std::numeric_limits<std::int64_t>::min()) { of = true; break; }
            if (a % b != 0) return {Status::Undefined, 0};
            a /= b;
            break;
          default: break;
        }
        if (of) { overflow = true; return {Status::Undefined, 0}; }
      }
    }
  }
  return {Status::Value, stack_[0]};
}

Evaluator::Result Evaluator::run_big(std::span<const BigInt> args) {
  std::size_t sp = 0;
  try {
    for (const auto& ins : code_) {
      switch (ins.code) {
        case Code::Const: big_stack_[sp++] = ins.big; break;
        case Code::Var: big_stack_[sp++] = args[static_cast<std::size_t>(ins.var)]; break;
        case Code::Neg: big_stack_[sp - 1] = -big_stack_[sp - 1]; break;
        case Code::Abs: big_stack_[sp - 1] = abs(big_stack_[sp - 1]); break;
        default: {
          --sp;
          const BigInt& b = big_stack_[sp];
          BigInt& a = big_stack_[sp - 1];
          switch (ins.code) {
            case Code::Add: a += b; break;
            case Code::Sub: a -= b; break;
            case Code::Mul:
              if (bit_length(a) + bit_length(b) > limits_.max_bits + 1) return {Status::TooLarge, 0};
              a *= b;
              break;
            case Code::Pow:
              if (b < 0) return {Status::Undefined, 0};
              a = checked_pow(a, b, limits_);
              break;
            case Code::Div:
              if (b == 0 || mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) == 0) return {Status::Undefined, 0};
              mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
              break;
            case Code::Root: {
              if (b <= 0 || !mpz_fits_ulong_p(b.get_mpz_t())) return {Status::Undefined, 0};
              auto r = exact_root(a, b.get_ui());
              if (!r) return {Status::Undefined, 0};
              a = *r;
              break;
            }
            case Code::Log: {
              auto r = exact_log(a, b);
              if (!r) return {Status::Undefined, 0};
              a = *r;
              break;
            }
            default: break;
          }
        }
      }
    }
  } catch (const TooLarge&) {
    return {Status::TooLarge, 0};
  }
  const BigInt& v = big_stack_[0];
  if (!fits_int64(v)) return {Status::Huge, 0};
  return {Status::Value, to_int64(v)};
}

Evaluator::Result Evaluator::eval_raw(std::span<const std::int64_t> args) {
  bool overflow = false;
  auto r = run_small(args, overflow);
  if (!overflow) return r;
  for (std::size_t i = 0; i < args.size(); ++i) big_args_[i] = from_int64(args[i]);
  return run_big(big_args_);
}

Evaluator::Result Evaluator::eval(std::span<const std::int64_t> args) {
  const auto& dom = op_->domain;
  for (auto a : args) {
    if (!dom.contains(a)) return {Status::Undefined, 0};
  }
  auto r = eval_raw(args);
  if (r.status == Status::Value && !dom.contains(r.value)) return {Status::Undefined, 0};
  if (r.status == Status::Huge && !dom.contains(big_stack_[0])) return {Status::Undefined, 0};
  return r;
}

std::optional<BigInt> Evaluator::eval_big(std::span<const BigInt> args) {
  for (const auto& a : args) {
    if (!op_->domain.contains(a)) return std::nullopt;
  }
  auto r = run_big(args);
  if (r.status == Status::TooLarge) throw TooLarge("evaluation exceeds bit budget");
  if (r.status == Status::Undefined) return std::nullopt;
  if (!op_->domain.contains(big_stack_[0])) return std::nullopt;
  return big_stack_[0];
}

}  // namespace nt
