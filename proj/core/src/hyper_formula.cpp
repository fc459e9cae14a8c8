#include "nt/hyper_formula.hpp"

#include <cctype>
#include <optional>

#include "nt/op_expr.hpp"

namespace nt {

HyperFormula HyperFormula::leaf(std::string atom) {
  HyperFormula f;
  f.atom = std::move(atom);
  return f;
}

HyperFormula HyperFormula::apply(int level, HyperFormula lhs, HyperFormula rhs) {
  HyperFormula f;
  f.level = level;
  f.left = std::make_shared<const HyperFormula>(std::move(lhs));
  f.right = std::make_shared<const HyperFormula>(std::move(rhs));
  return f;
}

std::size_t HyperFormula::operand_count() const {
  if (is_leaf()) return 1;
  return left->operand_count() + right->operand_count();
}

bool HyperFormula::operator==(const HyperFormula& other) const {
  if (is_leaf() != other.is_leaf()) return false;
  if (is_leaf()) return atom == other.atom;
  return level == other.level && *left == *other.left && *right == *other.right;
}

OrderSpec OrderSpec::parse(std::string_view text) {
  if (text == "->") return right();
  if (text == "<-") return left();
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') {
    std::vector<std::int64_t> s;
    std::string_view body = text.substr(1, text.size() - 2);
    std::size_t pos = 0;
    while (pos < body.size()) {
      auto comma = body.find(',', pos);
      auto item = body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
      while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
      auto v = parse_bigint(item);
      if (!v || *v < 0 || !fits_int64(*v)) throw SyntaxError("bad superscript '" + std::string(item) + "'", pos);
      s.push_back(to_int64(*v));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return explicit_order(std::move(s));
  }
  throw SyntaxError("expected ->, <- or [..] order", 0);
}

std::vector<std::int64_t> OrderSpec::supers_for(std::size_t count) const {
  const std::size_t ops = count == 0 ? 0 : count - 1;
  std::vector<std::int64_t> s(ops);
  switch (kind) {
    case OrderKind::ArrowRight:
      for (std::size_t i = 0; i < ops; ++i) s[i] = static_cast<std::int64_t>(i);
      break;
    case OrderKind::ArrowLeft:
      for (std::size_t i = 0; i < ops; ++i) s[i] = static_cast<std::int64_t>(ops - 1 - i);
      break;
    case OrderKind::Explicit:
      if (explicit_supers.size() != ops) {
        throw Ambiguous("order has " + std::to_string(explicit_supers.size()) + " superscripts, expected " +
                        std::to_string(ops));
      }
      s = explicit_supers;
      break;
  }
  return s;
}

std::string OrderSpec::to_string() const {
  if (kind == OrderKind::ArrowRight) return "->";
  if (kind == OrderKind::ArrowLeft) return "<-";
  std::string out = "[";
  for (std::size_t i = 0; i < explicit_supers.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(explicit_supers[i]);
  }
  return out + "]";
}

namespace {

std::int64_t max_super(const FlatForm& f) {
  std::int64_t m = -1;
  for (auto s : f.supers) m = std::max(m, s);
  return m;
}

void flatten_into(const HyperFormula& t, FlatForm& out) {
  if (t.is_leaf()) {
    out.operands.push_back(t.atom);
    return;
  }
  FlatForm l, r;
  flatten_into(*t.left, l);
  flatten_into(*t.right, r);
  const std::int64_t fresh = std::max(max_super(l), max_super(r)) + 1;
  out.operands.insert(out.operands.end(), l.operands.begin(), l.operands.end());
  out.levels.insert(out.levels.end(), l.levels.begin(), l.levels.end());
  out.supers.insert(out.supers.end(), l.supers.begin(), l.supers.end());
  out.levels.push_back(t.level);
  out.supers.push_back(fresh);
  out.operands.insert(out.operands.end(), r.operands.begin(), r.operands.end());
  out.levels.insert(out.levels.end(), r.levels.begin(), r.levels.end());
  out.supers.insert(out.supers.end(), r.supers.begin(), r.supers.end());
}

// ---------------------------------------------------------------------------
// Text parser

struct Span {
  std::size_t first;  // operand index range [first, last]
  std::size_t last;
  std::size_t pos;
};

class HyperParser {
 public:
  explicit HyperParser(std::string_view text) : text_(text) {}

  FlatForm parse() {
    FlatForm f = group();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    for (const auto& sp : spans_) {
      // A parenthesized span must be reduced before its boundary operators.
      std::int64_t inner = -1;
      for (std::size_t i = sp.first; i < sp.last; ++i) inner = std::max(inner, f.supers[i]);
      if (inner < 0) continue;
      if (sp.first > 0 && f.supers[sp.first - 1] <= inner) {
        throw SyntaxError("superscripts contradict parentheses", sp.pos);
      }
      if (sp.last < f.supers.size() && f.supers[sp.last] <= inner) {
        throw SyntaxError("superscripts contradict parentheses", sp.pos);
      }
    }
    return f;
  }

 private:
  struct Op {
    int level;
    std::optional<std::int64_t> super;
    std::optional<OrderSpec> order;  // hyper application
    std::size_t pos;
  };

  [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_operator() {
    skip_ws();
    return pos_ + 1 < text_.size() && text_[pos_] == 'o' &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) || text_[pos_ + 1] == '[');
  }

  std::int64_t number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 18) fail("number too large");
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  Op op() {
    skip_ws();
    Op o{0, std::nullopt, std::nullopt, pos_};
    ++pos_;  // 'o'
    if (pos_ < text_.size() && text_[pos_] == '[') {
      ++pos_;
      o.level = static_cast<int>(number());
      if (pos_ >= text_.size() || text_[pos_] != ']') fail("expected ']'");
      ++pos_;
    } else {
      o.level = static_cast<int>(number());
    }
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      if (text_.substr(pos_, 2) == "->" || text_.substr(pos_, 2) == "<-") {
        o.order = OrderSpec::parse(text_.substr(pos_, 2));
        pos_ += 2;
      } else if (pos_ < text_.size() && text_[pos_] == '[') {
        auto close = text_.find(']', pos_);
        if (close == std::string_view::npos) fail("unterminated superscript list");
        o.order = OrderSpec::parse(text_.substr(pos_, close - pos_ + 1));
        pos_ = close + 1;
      } else {
        o.super = number();
      }
    }
    return o;
  }

  // An operand: atom or parenthesized group. Records group spans.
  FlatForm item(std::size_t operand_offset) {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected an operand");
    if (text_[pos_] == '(') {
      const std::size_t open = pos_;
      ++pos_;
      const std::size_t mark = spans_.size();
      FlatForm f = group(operand_offset);
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      (void)mark;
      spans_.push_back({operand_offset, operand_offset + f.operands.size() - 1, open});
      return f;
    }
    const std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    } else if (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_') {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    } else {
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    FlatForm f;
    f.operands.emplace_back(text_.substr(start, pos_ - start));
    return f;
  }

  static bool is_count(const FlatForm& f) {
    return f.operands.size() == 1 && !f.operands[0].empty() &&
           std::all_of(f.operands[0].begin(), f.operands[0].end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  }

  FlatForm group(std::size_t operand_offset = 0) {
    FlatForm acc = item(operand_offset);
    std::optional<std::size_t> bare;  // index into acc.supers of the unlabelled operator
    std::size_t bare_pos = 0;
    while (at_operator()) {
      Op o = op();
      if (o.order) {
        if (!is_count(acc.operands.empty() ? FlatForm{} : FlatForm{{acc.operands.back()}, {}, {}})) {
          throw SyntaxError("hyper application needs an integer count on its left", o.pos);
        }
        if (o.level < 1) throw SyntaxError("hyper application needs level >= 1", o.pos);
        const std::int64_t count = std::stoll(acc.operands.back());
        if (count < 1 || count > 1'000'000) throw SyntaxError("copy count out of range", o.pos);
        skip_ws();
        const std::size_t atom_pos = pos_;
        FlatForm x = item(operand_offset + acc.operands.size());
        if (x.operands.size() != 1) throw SyntaxError("hyper application operand must be an atom", atom_pos);
        auto s = o.order->supers_for(static_cast<std::size_t>(count));
        acc.operands.pop_back();
        for (std::int64_t c = 0; c < count; ++c) {
          if (c > 0) {
            acc.levels.push_back(o.level - 1);
            acc.supers.push_back(s[static_cast<std::size_t>(c - 1)]);
          }
          acc.operands.push_back(x.operands[0]);
        }
        continue;
      }
      FlatForm rhs = item(operand_offset + acc.operands.size());
      acc.levels.push_back(o.level);
      if (o.super) {
        acc.supers.push_back(*o.super);
      } else {
        if (bare) throw SyntaxError("more than one operator without superscript in a group", o.pos);
        bare = acc.supers.size();
        bare_pos = o.pos;
        acc.supers.push_back(-1);
      }
      acc.operands.insert(acc.operands.end(), rhs.operands.begin(), rhs.operands.end());
      acc.levels.insert(acc.levels.end(), rhs.levels.begin(), rhs.levels.end());
      acc.supers.insert(acc.supers.end(), rhs.supers.begin(), rhs.supers.end());
    }
    if (bare) {
      std::int64_t m = -1;
      for (std::size_t i = 0; i < acc.supers.size(); ++i) {
        if (i != *bare) m = std::max(m, acc.supers[i]);
      }
      acc.supers[*bare] = m + 1;
      (void)bare_pos;
    }
    return acc;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<Span> spans_;
};

void print_tree(const HyperFormula& t, std::string& out) {
  if (t.is_leaf()) {
    out += t.atom;
    return;
  }
  out += '(';
  print_tree(*t.left, out);
  out += " o" + std::to_string(t.level) + ' ';
  print_tree(*t.right, out);
  out += ')';
}

}  // namespace

FlatForm flatten(const HyperFormula& formula) {
  FlatForm out;
  flatten_into(formula, out);
  return out;
}

HyperFormula structure(const FlatForm& flat) {
  return structure_fold<HyperFormula>(
      flat.operands.size(), flat.levels, flat.supers,
      [&](std::size_t k) { return HyperFormula::leaf(flat.operands[k]); },
      [](int level, HyperFormula&& l, HyperFormula&& r) {
        return HyperFormula::apply(level, std::move(l), std::move(r));
      });
}

FlatForm parse_hyper(std::string_view text) { return HyperParser(text).parse(); }

std::string print_hyper(const FlatForm& flat) {
  std::string out;
  for (std::size_t i = 0; i < flat.operands.size(); ++i) {
    if (i > 0) {
      out += " o" + std::to_string(flat.levels[i - 1]) + '^' + std::to_string(flat.supers[i - 1]) + ' ';
    }
    out += flat.operands[i];
  }
  return out;
}

std::string print_hyper(const HyperFormula& formula) {
  std::string out;
  print_tree(formula, out);
  return out;
}

}  // namespace nt
