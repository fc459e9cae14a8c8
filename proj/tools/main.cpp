#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "nt/dioph.hpp"
#include "nt/hyper_engine.hpp"
#include "nt/hyper_factor.hpp"
#include "nt/lseries.hpp"
#include "nt/modarith.hpp"
#include "nt/parallel.hpp"
#include "nt/verify.hpp"
#include "report.hpp"

namespace {

using nt::BigInt;
using nt::report::Json;
using Range = std::pair<std::int64_t, std::int64_t>;

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kTooLarge = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string op;
  int arity = 0;
  std::vector<std::string> params;
  std::string domain;
  std::string range;
  std::string span;
  std::optional<std::int64_t> radius;
  std::optional<int> depth;
  std::string semantics = "top";
  std::optional<std::uint64_t> max_bits;
  std::string format = "json";
  unsigned jobs = 1;
  std::string out;
};

BigInt big_arg(const std::string& text, const char* what) {
  auto v = nt::parse_bigint(text);
  if (!v) throw UsageError(std::string("--") + what + ": not an integer: '" + text + "'");
  return *v;
}

Range parse_range(const std::string& text, const char* what) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError(std::string("--") + what + " expects <lo>..<hi>");
  const auto lo = nt::parse_bigint(std::string_view(text).substr(0, dots));
  const auto hi = nt::parse_bigint(std::string_view(text).substr(dots + 2));
  if (!lo || !hi || !nt::fits_int64(*lo) || !nt::fits_int64(*hi) || *lo > *hi) {
    throw UsageError(std::string("--") + what + ": bad range '" + text + "'");
  }
  return {nt::to_int64(*lo), nt::to_int64(*hi)};
}

nt::DomainSpec parse_domain(const std::string& text) {
  if (text.rfind("set:", 0) != 0) return nt::DomainSpec::parse(text);
  std::ifstream in(text.substr(4));
  if (!in) throw UsageError("cannot read set file '" + text.substr(4) + "'");
  std::vector<std::int64_t> values;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto v = nt::parse_bigint(line);
    if (!v || !nt::fits_int64(*v)) throw UsageError("set file: bad line '" + line + "'");
    values.push_back(nt::to_int64(*v));
  }
  if (!std::is_sorted(values.begin(), values.end()) ||
      std::adjacent_find(values.begin(), values.end()) != values.end()) {
    throw UsageError("set file must be strictly increasing");
  }
  return nt::DomainSpec::explicit_set(std::move(values));
}

/// State shared by every leaf command.
struct Context {
  Common c;
  nt::report::RunManifest manifest;
  nt::EvalLimits limits;

  std::map<std::string, BigInt> params() const {
    std::map<std::string, BigInt> out;
    for (const auto& p : c.params) {
      const auto eq = p.find('=');
      if (eq == std::string::npos) throw UsageError("--param expects name=value");
      out[p.substr(0, eq)] = big_arg(p.substr(eq + 1), "param");
    }
    return out;
  }

  /// Parses `text`, prints it, parses the print and checks the two trees
  /// agree before handing the second one out.
  nt::OpSpec op(const std::string& text, const std::string& default_domain, int arity = 0,
                bool record = true) {
    if (text.empty()) throw UsageError("--op is required");
    const auto dom = parse_domain(c.domain.empty() ? default_domain : c.domain);
    const auto ps = params();
    if (arity == 0) arity = c.arity;
    if (arity == 0) {
      arity = std::max(1, nt::max_var_index(nt::parse_op_expr(text, 64, ps, dom).body));
    }
    const auto first = nt::parse_op_expr(text, arity, ps, dom);
    const std::string printed = nt::print_op_expr(first.body);
    auto second = nt::parse_op_expr(printed, arity, ps, dom);
    if (!nt::structurally_equal(first.body, second.body)) {
      throw std::logic_error("op does not survive the parse/print round trip: " + printed);
    }
    if (record) manifest.op = printed;
    return second;
  }

  Range range(const char* what = "range") const {
    if (c.range.empty()) throw UsageError(std::string("--") + what + " is required");
    return parse_range(c.range, what);
  }

  nt::CertBounds bounds(const nt::OpSpec& op, std::int64_t lo, std::int64_t hi) {
    auto b = nt::default_bounds(op, lo, hi);
    if (!c.span.empty()) std::tie(b.span_lo, b.span_hi) = parse_range(c.span, "span");
    if (c.radius) b.radius = *c.radius;
    if (c.depth) b.depth = *c.depth;
    manifest.bounds = b;
    return b;
  }

  nt::Semantics semantics() const { return nt::Semantics::parse(c.semantics); }
};

using Handler = std::function<nt::report::CommandOutput(Context&)>;

std::string join_ints(const std::vector<std::int64_t>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

Json json_ints(const std::vector<std::int64_t>& v) { return Json(v); }

Json series_json(const nt::SeriesPoint& p) {
  Json j = {{"s", p.s}, {"N", p.n}, {"exact", p.exact}};
  if (p.exact) j["rational"] = p.value.get_str();
  j["decimal"] = p.decimal;
  j["zeta_tail_bound"] = p.zeta_tail_bound;
  return j;
}

// ---------------------------------------------------------------------------
// hyper

struct HyperArgs {
  std::string n, x, y, order = "->", formula;
  int level = 3;
  std::vector<std::string> bind;
};

nt::report::CommandOutput hyper_eval(Context& ctx, const HyperArgs& a) {
  nt::report::CommandOutput out;
  BigInt v;
  if (!a.formula.empty()) {
    std::map<std::string, BigInt> binding;
    for (const auto& b : a.bind) {
      const auto eq = b.find('=');
      if (eq == std::string::npos) throw UsageError("--bind expects name=value");
      binding[b.substr(0, eq)] = big_arg(b.substr(eq + 1), "bind");
    }
    const auto flat = nt::parse_hyper(a.formula);
    out.result["formula"] = nt::print_hyper(flat);
    try {
      v = nt::eval_flat(flat, binding, ctx.limits);
    } catch (const std::out_of_range&) {
      throw UsageError("formula has an unbound symbol; use --bind name=value");
    }
  } else {
    if (a.n.empty() || a.x.empty()) throw UsageError("hyper eval needs --n and --x, or --formula");
    const BigInt n = big_arg(a.n, "n");
    if (n < 1 || !n.fits_ulong_p()) throw UsageError("--n must be a positive integer");
    v = nt::hyper_eval(n.get_ui(), a.level, nt::OrderSpec::parse(a.order), big_arg(a.x, "x"), ctx.limits);
  }
  out.result["value"] = nt::report::big(v);
  out.result["bits"] = nt::bit_length(v);
  out.table = {{"value"}, {{v.get_str()}}};
  out.text = v.get_str() + "\n";
  return out;
}

nt::report::CommandOutput hyper_convert(Context&, const HyperArgs& a) {
  if (a.formula.empty()) throw UsageError("--formula is required");
  const auto flat = nt::parse_hyper(a.formula);
  const auto tree = nt::structure(flat);
  const auto canon = nt::flatten(tree);
  nt::report::CommandOutput out;
  out.result = {{"flat", nt::print_hyper(flat)},
                {"supers", flat.supers},
                {"tree", nt::print_hyper(tree)},
                {"canonical", nt::print_hyper(canon)},
                {"canonical_supers", canon.supers}};
  out.table = {{"form", "text"},
               {{"flat", nt::print_hyper(flat)}, {"tree", nt::print_hyper(tree)}, {"canonical", nt::print_hyper(canon)}}};
  out.text = "flat:      " + nt::print_hyper(flat) + "\ntree:      " + nt::print_hyper(tree) +
             "\ncanonical: " + nt::print_hyper(canon) + "\n";
  return out;
}

nt::report::CommandOutput hyper_distrib(Context& ctx, const HyperArgs& a) {
  if (a.n.empty() || a.x.empty() || a.y.empty()) throw UsageError("hyper distrib needs --n, --x and --y");
  const BigInt n = big_arg(a.n, "n");
  if (n < 1 || !n.fits_ulong_p()) throw UsageError("--n must be a positive integer");
  const auto r = nt::distrib_check(a.level, n.get_ui(), big_arg(a.x, "x"), big_arg(a.y, "y"), ctx.limits);
  nt::report::CommandOutput out;
  out.result = {{"level", a.level},
                {"rhs_form", nt::print_hyper(nt::distrib_rhs_form(a.level, n.get_ui()))},
                {"lhs", nt::report::big(r.lhs)},
                {"rhs", nt::report::big(r.rhs)},
                {"equal", r.equal}};
  out.table = {{"lhs", "rhs", "equal"}, {{r.lhs.get_str(), r.rhs.get_str(), r.equal ? "true" : "false"}}};
  out.exit_code = r.equal ? kOk : kViolation;
  return out;
}

nt::report::CommandOutput hyper_zero(Context& ctx, const HyperArgs& a) {
  Range r;
  if (!a.n.empty()) {
    const auto n = nt::to_int64(big_arg(a.n, "n"));
    r = {n, n};
  } else {
    r = ctx.range();
  }
  if (r.first < 1) throw UsageError("n must be >= 1");
  nt::report::CommandOutput out;
  out.table.header = {"n", "value", "parity_prediction"};
  Json rows = Json::array();
  bool ok = true;
  for (auto n = r.first; n <= r.second; ++n) {
    const int v = nt::zero_tower(static_cast<std::uint64_t>(n));
    const int expect = n % 2 == 0 ? 1 : 0;
    ok = ok && v == expect;
    rows.push_back({{"n", n}, {"value", v}, {"parity_prediction", expect}});
    out.table.rows.push_back({std::to_string(n), std::to_string(v), std::to_string(expect)});
  }
  out.result = {{"towers", rows}, {"all_match", ok}};
  out.exit_code = ok ? kOk : kViolation;
  return out;
}

// ---------------------------------------------------------------------------
// factor

struct FactorArgs {
  std::string n;
  int level = 3;
  bool unique = false;
};

Json hyper_json(const nt::HyperFactorization& hf) {
  Json terms = Json::array();
  for (const auto& t : hf.terms) terms.push_back({{"q", nt::report::big(t.q)}, {"b", nt::report::big(t.b)}});
  Json j = {{"level", hf.level}, {"terms", terms}};
  if (hf.degenerate) j["degenerate"] = true;
  return j;
}

std::string hyper_text(const nt::HyperFactorization& hf) {
  std::string s;
  for (const auto& t : hf.terms) s += (s.empty() ? "" : " ") + ("(" + t.q.get_str() + "," + t.b.get_str() + ")");
  return s;
}

nt::report::CommandOutput factor_usual(Context&, const FactorArgs& a) {
  const BigInt n = big_arg(a.n, "n");
  if (n < 1) throw UsageError("--n must be >= 1");
  const auto f = nt::factor_usual(n);
  nt::report::CommandOutput out;
  Json factors = Json::array();
  out.table.header = {"p", "e"};
  std::string text;
  for (const auto& [p, e] : f) {
    factors.push_back({nt::report::big(p), e});
    out.table.rows.push_back({p.get_str(), std::to_string(e)});
    text += (text.empty() ? "" : " * ") + p.get_str() + (e > 1 ? "^" + std::to_string(e) : "");
  }
  out.result = {{"n", nt::report::big(n)}, {"factors", factors}};
  out.text = n.get_str() + " = " + (text.empty() ? "1" : text) + "\n";
  return out;
}

nt::report::CommandOutput factor_exp(Context& ctx, const FactorArgs& a) {
  Range r;
  if (!a.n.empty()) {
    const auto n = big_arg(a.n, "n");
    if (!nt::fits_int64(n)) {
      nt::report::CommandOutput out;
      const bool e = nt::is_exp_prime(n);
      out.result = {{"n", n.get_str()}, {"exp_prime", e}};
      out.table = {{"n", "exp_prime"}, {{n.get_str(), e ? "true" : "false"}}};
      return out;
    }
    r = {nt::to_int64(n), nt::to_int64(n)};
  } else {
    r = ctx.range();
  }
  if (r.first < 1) throw UsageError("n must be >= 1");
  nt::report::CommandOutput out;
  out.table.header = {"n", "exp_prime", "brute_force"};
  Json rows = Json::array();
  bool agree = true;
  for (auto n = r.first; n <= r.second; ++n) {
    const bool e = nt::is_exp_prime(n), b = nt::is_exp_prime_bf(n);
    agree = agree && e == b;
    rows.push_back({{"n", n}, {"exp_prime", e}, {"brute_force", b}});
    out.table.rows.push_back({std::to_string(n), e ? "true" : "false", b ? "true" : "false"});
  }
  out.result = {{"values", rows}, {"agree", agree}};
  out.exit_code = agree ? kOk : kViolation;
  return out;
}

nt::report::CommandOutput factor_hyper3(Context& ctx, const FactorArgs& a) {
  const BigInt n = big_arg(a.n, "n");
  if (n < 2) throw UsageError("--n must be >= 2");
  const auto hf = nt::hyper_factorize(n, a.level);
  const BigInt back = nt::recompose(hf, ctx.limits);
  const bool side = nt::check_side_conditions(hf, ctx.limits);
  nt::report::CommandOutput out;
  out.result = hyper_json(hf);
  out.result["n"] = nt::report::big(n);
  out.result["recomposed"] = nt::report::big(back);
  out.result["side_conditions"] = side;
  if (a.unique && a.level == 3) {
    if (!n.fits_ulong_p() || n > 1000000) throw UsageError("--unique needs n <= 10^6");
    const auto reps = nt::enumerate_hyper3_reps(n, n.get_ui());
    out.result["representations_found"] = reps.size();
    out.result["unique"] = reps.size() == 1 && reps[0] == hf;
    if (!(reps.size() == 1 && reps[0] == hf)) out.exit_code = kViolation;
  }
  out.table.header = {"q", "b"};
  for (const auto& t : hf.terms) out.table.rows.push_back({t.q.get_str(), t.b.get_str()});
  out.text = n.get_str() + ": " + hyper_text(hf) + "\n";
  if (back != n || !side) out.exit_code = kViolation;
  return out;
}

nt::report::CommandOutput factor_verify(Context& ctx, const FactorArgs& a) {
  const auto r = ctx.range();
  if (r.first < 2) throw UsageError("range must start at >= 2");
  if (a.unique && r.second > 1000000) throw UsageError("--unique needs n <= 10^6");
  const auto count = static_cast<std::size_t>(r.second - r.first + 1);
  std::vector<char> bad(count, 0);
  nt::parallel_for(count, ctx.c.jobs, [&](std::size_t i) {
    const BigInt n(static_cast<long>(r.first + static_cast<std::int64_t>(i)));
    const auto hf = nt::hyper_factorize(n, a.level);
    bool ok = nt::recompose(hf) == n && nt::check_side_conditions(hf);
    if (a.level == 3) {
      for (const auto& t : hf.terms) ok = ok && nt::is_exp_prime(t.q);
      if (a.unique) {
        const auto reps = nt::enumerate_hyper3_reps(n, n.get_ui());
        ok = ok && reps.size() == 1 && reps[0] == hf;
      }
    }
    bad[i] = !ok;
  });
  std::vector<std::int64_t> failures;
  for (std::size_t i = 0; i < count; ++i) {
    if (bad[i]) failures.push_back(r.first + static_cast<std::int64_t>(i));
  }
  nt::report::CommandOutput out;
  out.result = {{"level", a.level}, {"checked", count}, {"failures", json_ints(failures)}};
  if (a.unique) out.result["unique_checked"] = true;
  out.table.header = {"n"};
  for (auto f : failures) out.table.rows.push_back({std::to_string(f)});
  out.text = std::to_string(count) + " checked, " + std::to_string(failures.size()) + " failures\n";
  out.exit_code = failures.empty() ? kOk : kViolation;
  return out;
}

// ---------------------------------------------------------------------------
// prime

nt::report::CommandOutput prime_sieve(Context& ctx, bool set_only) {
  const auto op = ctx.op(ctx.c.op, "n1");
  const auto [lo, hi] = ctx.range();
  const auto b = ctx.bounds(op, lo, hi);
  const auto t = nt::sieve(op, lo, hi, b, ctx.semantics(), ctx.c.jobs, ctx.limits);
  nt::report::CommandOutput out;
  if (set_only) {
    const auto primes = t.with(nt::Verdict::Prime);
    out.result = {{"window", {lo, hi}}, {"primes", json_ints(primes)}, {"notes", t.notes}};
    out.table.header = {"n"};
    for (auto p : primes) out.table.rows.push_back({std::to_string(p)});
    out.text = join_ints(primes, "\n") + (primes.empty() ? "" : "\n");
  } else {
    out.result = nt::report::sieve(t);
    out.table = nt::report::sieve_table(t);
  }
  return out;
}

nt::report::CommandOutput prime_classify(Context& ctx, const std::string& n_text) {
  const auto op = ctx.op(ctx.c.op, "n1");
  const BigInt n = big_arg(n_text, "n");
  if (!nt::fits_int64(n)) throw UsageError("--n must fit in 64 bits");
  const auto m = nt::to_int64(n);
  if (!op.domain.contains(m)) throw UsageError("--n is not in the op's domain");
  const auto b = ctx.bounds(op, m, m);
  const auto c = nt::classify(op, m, b, ctx.semantics(), ctx.limits);
  nt::report::CommandOutput out;
  out.result = nt::report::classification(c);
  out.table = {{"n", "verdict", "witness", "certification"},
               {{std::to_string(m), std::string(nt::to_string(c.verdict)), c.witness ? c.witness->to_string() : "",
                 c.proven ? "proven" : "bounded"}}};
  return out;
}

// ---------------------------------------------------------------------------
// dioph

struct DiophArgs {
  std::string g_op;
  std::string h_op;
  std::vector<std::string> box;
  std::string base_op = "x^2+y^2";
  std::string base_domain = "n1";
  std::string outer = "x+y";
};

nt::report::CommandOutput dioph_solve(Context& ctx, const DiophArgs& a) {
  const auto f = ctx.op(ctx.c.op, "n1");
  if (a.g_op.empty()) throw UsageError("--g-op is required");
  const auto g = ctx.op(a.g_op, "n1", 0, false);
  nt::SolutionBox box;
  const int vars = f.arity + g.arity;
  if (a.box.size() == 1) {
    const auto [lo, hi] = parse_range(a.box[0], "box");
    box = nt::SolutionBox::cube(vars, lo, hi);
  } else if (static_cast<int>(a.box.size()) == vars) {
    for (const auto& r : a.box) box.ranges.push_back(parse_range(r, "box"));
  } else {
    throw UsageError("--box takes one range (cube) or one per variable");
  }
  const auto sols = nt::solve_box(f, g, box, ctx.c.jobs);
  nt::report::CommandOutput out;
  Json rows = Json::array();
  out.table.header = {"x", "y", "value", "nowhere_trivial"};
  for (const auto& s : sols) {
    Json tx = Json::array(), ty = Json::array();
    for (const auto& t : s.trivial_x) tx.push_back(nt::report::certified(t));
    for (const auto& t : s.trivial_y) ty.push_back(nt::report::certified(t));
    rows.push_back({{"x", s.x}, {"y", s.y}, {"value", nt::report::big(s.value)}, {"trivial_x", tx},
                    {"trivial_y", ty}, {"nowhere_trivial", s.nowhere_trivial()}});
    out.table.rows.push_back(
        {join_ints(s.x, " "), join_ints(s.y, " "), s.value.get_str(), s.nowhere_trivial() ? "true" : "false"});
  }
  out.result = {{"equation", nt::print_op_expr(f.body) + " = " + nt::print_op_expr(g.body)},
                {"g", nt::print_op_expr(g.body)},
                {"solutions", rows}};
  return out;
}

nt::report::CommandOutput dioph_intersect(Context& ctx, const DiophArgs& a, bool cover) {
  const auto f = ctx.op(ctx.c.op, "n1");
  if (a.g_op.empty()) throw UsageError("--g-op is required");
  const auto g = ctx.op(a.g_op, "n1", 0, false);
  const auto [lo, hi] = ctx.range();
  const auto fb = ctx.bounds(f, lo, hi);
  auto gb = nt::default_bounds(g, lo, hi);
  if (!ctx.c.span.empty()) gb.span_lo = fb.span_lo, gb.span_hi = fb.span_hi;
  if (ctx.c.radius) gb.radius = *ctx.c.radius;
  nt::report::CommandOutput out;
  out.result["equation"] = nt::print_op_expr(f.body) + " = " + nt::print_op_expr(g.body);
  out.result["window"] = {lo, hi};
  out.result["g_bounds"] = nt::report::bounds(gb);
  if (cover) {
    const auto rep = nt::prime_cover_check(f, g, lo, hi, fb, gb, ctx.c.jobs);
    out.result["covered"] = rep.covered;
    out.result["exceptions"] = json_ints(rep.exceptions);
    out.result["consistent"] = rep.consistent;
    out.result["unknown"] = rep.unknown;
    out.table.header = {"exception"};
    for (auto e : rep.exceptions) out.table.rows.push_back({std::to_string(e)});
    out.text = std::string(rep.covered ? "covered" : "not covered") + "; exceptions: " + join_ints(rep.exceptions) +
               "\n";
    out.exit_code = rep.covered ? kOk : kViolation;
    return out;
  }
  std::optional<nt::OpSpec> h;
  if (!a.h_op.empty()) h = ctx.op(a.h_op, "n1", 1, false);
  const auto entries = nt::composite_intersection(f, g, lo, hi, fb, gb, h ? &*h : nullptr, ctx.c.jobs);
  Json rows = Json::array();
  out.table.header = {"value", "source", "f_args", "g_args"};
  for (const auto& e : entries) {
    rows.push_back({{"value", e.value}, {"source", e.source}, {"f_args", e.f_args}, {"g_args", e.g_args}});
    out.table.rows.push_back(
        {std::to_string(e.value), std::to_string(e.source), join_ints(e.f_args, " "), join_ints(e.g_args, " ")});
  }
  out.result["intersection"] = rows;
  return out;
}

nt::report::CommandOutput dioph_goldbach(Context& ctx, const DiophArgs& a) {
  const auto [lo, hi] = ctx.range();
  const auto saved = ctx.c.domain;
  ctx.c.domain = a.base_domain;
  const auto base_op = ctx.op(a.base_op, "n1");
  ctx.c.domain = saved;
  const auto outer = ctx.op(a.outer, "n1", 2, false);
  const std::int64_t top = std::max<std::int64_t>(hi, 1);
  const auto b = ctx.bounds(base_op, 1, top);
  const auto base = nt::prime_set(base_op, std::max<std::int64_t>(1, base_op.domain.min().value_or(1)), top, b,
                                  ctx.c.jobs)
                        .explicit_elements();
  const auto fails = nt::cover_scan(base, outer, lo, hi, ctx.c.jobs);
  nt::report::CommandOutput out;
  out.result = {{"outer", nt::print_op_expr(outer.body)},
                {"range", {lo, hi}},
                {"base_size", base.size()},
                {"failures", json_ints(fails)}};
  out.table.header = {"failure"};
  for (auto f : fails) out.table.rows.push_back({std::to_string(f)});
  out.text = std::to_string(fails.size()) + " failures" + (fails.empty() ? "" : ": " + join_ints(fails)) + "\n";
  out.exit_code = fails.empty() ? kOk : kViolation;
  return out;
}

nt::report::CommandOutput dioph_foursquare(Context& ctx) {
  const auto op = ctx.op(ctx.c.op.empty() ? "x1^2+x2^2+x3^2+x4^2" : ctx.c.op, "n0");
  const auto [lo, hi] = ctx.range();
  const auto b = ctx.bounds(op, lo, hi);
  const auto reps = nt::representable_range(op, lo, hi, b, ctx.c.jobs);
  std::vector<std::int64_t> fails;
  nt::report::CommandOutput out;
  out.table.header = {"n", "witness"};
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const auto n = lo + static_cast<std::int64_t>(i);
    if (!reps[i]) fails.push_back(n);
    out.table.rows.push_back({std::to_string(n), reps[i] ? join_ints(*reps[i], " ") : ""});
  }
  out.result = {{"range", {lo, hi}}, {"failures", json_ints(fails)}};
  if (lo == hi && reps[0]) out.result["witness"] = *reps[0];
  out.text = std::to_string(fails.size()) + " failures" + (fails.empty() ? "" : ": " + join_ints(fails)) + "\n";
  out.exit_code = fails.empty() ? kOk : kViolation;
  return out;
}

// ---------------------------------------------------------------------------
// lseries

struct LArgs {
  std::int64_t cutoff = 1000;
  std::size_t size = 64;
  std::string source = "tac";
  std::string s = "2";
};

std::vector<nt::CombPtr> elements(Context& ctx, const LArgs& a, const nt::OpSpec& op) {
  const auto b = ctx.bounds(op, 1, a.cutoff);
  const auto leaves = nt::comb_leaves(op, a.cutoff, b, ctx.c.jobs);
  if (a.source == "tac") return nt::gen_TAC(op, leaves, a.cutoff, a.size, b);
  if (a.source == "f") return nt::gen_F(op, leaves, a.cutoff, a.size, b);
  throw UsageError("--source must be tac or f");
}

nt::report::CommandOutput lseries_tac(Context& ctx, const LArgs& a) {
  const auto op = ctx.op(ctx.c.op.empty() ? "x*y" : ctx.c.op, "n1", 2);
  LArgs t = a;
  const auto els = elements(ctx, t, op);
  nt::report::CommandOutput out;
  Json rows = Json::array();
  out.table.header = {"value", "tree"};
  for (const auto& e : els) {
    rows.push_back({{"value", e->value}, {"tree", e->to_string()}});
    out.table.rows.push_back({std::to_string(e->value), e->to_string()});
  }
  out.result = {{"source", a.source}, {"cutoff", a.cutoff}, {"count", els.size()}, {"elements", rows}};
  return out;
}

nt::report::CommandOutput lseries_coeffs(Context& ctx, const LArgs& a) {
  const auto op = ctx.op(ctx.c.op.empty() ? "x*y" : ctx.c.op, "n1", 2);
  const auto table = nt::coeff_table(elements(ctx, a, op), a.cutoff, a.source == "tac" ? "TAC" : "F");
  nt::report::CommandOutput out;
  out.table.header = {"i", "c_i"};
  Json counts = Json::array();
  std::size_t nonunit = 0;
  for (std::int64_t i = 1; i <= a.cutoff; ++i) {
    counts.push_back(table.at(i));
    nonunit += table.at(i) != 1;
    out.table.rows.push_back({std::to_string(i), std::to_string(table.at(i))});
  }
  out.result = {{"source", a.source}, {"cutoff", a.cutoff}, {"counts", counts}, {"entries_not_one", nonunit}};
  return out;
}

nt::report::CommandOutput lseries_eval(Context& ctx, const LArgs& a) {
  const auto op = ctx.op(ctx.c.op.empty() ? "x*y" : ctx.c.op, "n1", 2);
  const auto table = nt::coeff_table(elements(ctx, a, op), a.cutoff, a.source == "tac" ? "TAC" : "F");
  const auto l = nt::lseries_partial(table, a.s, a.cutoff);
  const auto z = nt::zeta_partial(a.s, a.cutoff);
  const auto d = nt::defect_partial(table, a.s, a.cutoff);
  nt::report::CommandOutput out;
  out.result = {{"source", a.source},
                {"lseries", series_json(l)},
                {"zeta", series_json(z)},
                {"defect", series_json(d)},
                {"lseries_equals_zeta", l.exact ? l.value == z.value : l.decimal == z.decimal}};
  out.table = {{"series", "decimal"}, {{"lseries", l.decimal}, {"zeta", z.decimal}, {"defect", d.decimal}}};
  return out;
}

// ---------------------------------------------------------------------------
// mod

struct ModArgs {
  std::string c, b, m, a, p, k, u, v, h;
  std::string g_op = "x+y", g_inv = "x-y", side = "right";
  std::int64_t sample = 12;
  std::int64_t kmax = 0, amax = 20;
  std::uint64_t pmax = 0;
  std::string hrange = "-3..3", vrange = "2..6";
};

std::uint64_t prime_arg(const std::string& text) {
  const BigInt p = big_arg(text, "p");
  if (p < 1 || !p.fits_ulong_p()) throw UsageError("--p must be a positive integer");
  return p.get_ui();
}

nt::InversePair pair_of(Context& ctx, const ModArgs& a) {
  nt::InversePair pair{ctx.op(a.g_op, "z", 2, false), ctx.op(a.g_inv, "z", 2, false), nt::InverseSide::Right};
  if (a.side == "left") {
    pair.side = nt::InverseSide::Left;
  } else if (a.side != "right") {
    throw UsageError("--side must be right or left");
  }
  return pair;
}

nt::report::CommandOutput mod_congruent(Context& ctx, const ModArgs& a) {
  if (a.c.empty() || a.b.empty() || a.m.empty()) throw UsageError("mod congruent needs --c, --b and --m");
  const auto f = ctx.op(ctx.c.op.empty() ? "x*y" : ctx.c.op, "z", 2);
  nt::CongruenceQuery q{big_arg(a.c, "c"), big_arg(a.b, "b"), big_arg(a.m, "m"), pair_of(ctx, a), f, ctx.semantics()};
  if (!f.domain.contains(q.m)) throw UsageError("--m is not in f's domain");
  const auto r = nt::congruent(q, ctx.bounds(f, 0, 0));
  nt::report::CommandOutput out;
  out.result = {{"congruent", nt::report::certified(r.holds)}};
  if (r.d) out.result["d"] = nt::report::big(*r.d);
  if (r.alpha) {
    out.result["alpha"] = nt::report::big(*r.alpha);
    out.result["alpha_position"] = r.alpha_right ? "right" : "left";
  }
  if (!r.diagnostic.empty()) out.result["diagnostic"] = r.diagnostic;
  out.table = {{"congruent", "status", "d", "alpha"},
               {{r.holds.value ? "true" : "false", r.holds.proven ? "proven" : "bounded", r.d ? r.d->get_str() : "",
                 r.alpha ? r.alpha->get_str() : ""}}};
  return out;
}

nt::report::CommandOutput mod_fold(Context& ctx, const ModArgs& a) {
  if (a.a.empty() || a.p.empty()) throw UsageError("mod fold needs --a and --p");
  const auto op = ctx.op(ctx.c.op, "z", 2);
  const auto v = nt::power_fold(op, big_arg(a.a, "a"), prime_arg(a.p), ctx.limits);
  nt::report::CommandOutput out;
  out.result = {{"value", nt::report::big(v)}};
  out.table = {{"value"}, {{v.get_str()}}};
  out.text = v.get_str() + "\n";
  return out;
}

Json fermat_json(const nt::FermatReport& r) {
  return {{"fold", nt::report::big(r.fold)},
          {"congruence", r.congruence},
          {"closed_form", r.closed_form},
          {"divisible", r.divisible},
          {"ok", r.ok()}};
}

nt::report::CommandOutput grid_output(const nt::GridReport& g) {
  nt::report::CommandOutput out;
  out.result = {{"cases", g.cases}, {"failures", g.failures}, {"counterexamples", g.counterexamples}};
  out.table.header = {"counterexample"};
  for (const auto& c : g.counterexamples) out.table.rows.push_back({c});
  out.text = std::to_string(g.cases) + " cases, " + std::to_string(g.failures) + " failures\n";
  out.exit_code = g.failures == 0 ? kOk : kViolation;
  return out;
}

nt::report::CommandOutput single_output(const nt::FermatReport& r) {
  nt::report::CommandOutput out;
  out.result = fermat_json(r);
  out.table = {{"fold", "congruence", "closed_form", "divisible"},
               {{r.fold.get_str(), r.congruence ? "true" : "false", r.closed_form ? "true" : "false",
                 r.divisible ? "true" : "false"}}};
  out.exit_code = r.ok() ? kOk : kViolation;
  return out;
}

nt::report::CommandOutput mod_fermat_kxy(Context& ctx, const ModArgs& a) {
  if (a.pmax > 0) {
    return grid_output(nt::fermat_kxy_grid(a.kmax > 0 ? a.kmax : 20, a.amax, a.pmax, ctx.c.jobs));
  }
  if (a.k.empty() || a.a.empty() || a.p.empty()) throw UsageError("mod fermat-kxy needs --k, --a, --p or --pmax");
  return single_output(nt::fermat_kxy_check(big_arg(a.k, "k"), big_arg(a.a, "a"), prime_arg(a.p), ctx.limits));
}

nt::report::CommandOutput mod_fermat_linear(Context& ctx, const ModArgs& a) {
  if (a.pmax > 0) {
    const auto hr = parse_range(a.hrange, "h-range");
    const auto vr = parse_range(a.vrange, "v-range");
    return grid_output(
        nt::fermat_linear_grid(hr.first, hr.second, vr.first, vr.second, a.kmax > 0 ? a.kmax : 10, a.pmax, ctx.c.jobs));
  }
  if (a.v.empty() || a.h.empty() || a.k.empty() || a.p.empty()) {
    throw UsageError("mod fermat-linear needs --v, --h, --k, --p (and optionally --u) or --pmax");
  }
  const BigInt v = big_arg(a.v, "v"), h = big_arg(a.h, "h");
  const BigInt u = a.u.empty() ? BigInt(h * (v - 1)) : big_arg(a.u, "u");
  return single_output(nt::fermat_linear_check(u, v, h, big_arg(a.k, "k"), prime_arg(a.p), ctx.limits));
}

nt::report::CommandOutput mod_inverse_check(Context& ctx, const ModArgs& a) {
  const auto r = nt::inverse_check(pair_of(ctx, a), a.sample);
  nt::report::CommandOutput out;
  out.result = {{"holds", nt::report::certified(r.holds)}, {"checked", r.checked}};
  if (!r.counterexample.empty()) out.result["counterexample"] = r.counterexample;
  out.table = {{"holds", "checked", "counterexample"},
               {{r.holds.value ? "true" : "false", std::to_string(r.checked), join_ints(r.counterexample, " ")}}};
  out.exit_code = r.holds.value ? kOk : kViolation;
  return out;
}

// ---------------------------------------------------------------------------
// verify

nt::report::CommandOutput verify_all(Context& ctx, const std::string& profile, bool tamper) {
  const auto results = nt::verify_all(nt::parse_profile(profile), ctx.c.jobs, tamper);
  nt::report::CommandOutput out;
  Json rows = Json::array();
  out.table.header = {"id", "criterion", "status", "seconds", "limit", "detail"};
  bool all = true;
  std::ostringstream text;
  for (const auto& r : results) {
    all = all && r.passed();
    rows.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed()}, {"correct", r.correct},
                    {"limit_seconds", r.limit_seconds}, {"detail", r.detail}});
    std::ostringstream secs;
    secs.precision(3);
    secs << std::fixed << r.seconds;
    out.table.rows.push_back({std::to_string(r.id), r.name, r.passed() ? "PASS" : "FAIL", secs.str(),
                              std::to_string(static_cast<int>(r.limit_seconds)), r.detail});
    text << (r.passed() ? "PASS " : "FAIL ") << r.id << ". " << r.name << " (" << secs.str() << "s / "
         << r.limit_seconds << "s): " << r.detail << "\n";
  }
  out.result = {{"profile", profile}, {"tampered", tamper}, {"passed", all}, {"criteria", rows}};
  out.text = text.str();
  out.exit_code = all ? kOk : kViolation;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized number theory toolkit: hyperoperations, generalized primes, Diophantine bridges, "
               "L-series and generalized congruences."};
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx;
  auto& c = ctx.c;
  app.add_option("--op", c.op, "operation f(x1..xn) in the expression DSL");
  app.add_option("--arity", c.arity, "arity of --op (default: largest variable index)");
  app.add_option("--param", c.params, "bind a parameter, e.g. k=3 (repeatable)");
  app.add_option("--domain", c.domain, "n1 | n0 | z | z:<lo>..<hi> | set:<file>");
  app.add_option("--range", c.range, "window <lo>..<hi>");
  app.add_option("--span", c.span, "unit-test target span <lo>..<hi>");
  app.add_option("--radius", c.radius, "witness search radius");
  app.add_option("--depth", c.depth, "representation depth bound");
  app.add_option("--semantics", c.semantics, "top | deep:<d>");
  app.add_option("--max-bits", c.max_bits, "bit budget for intermediate values");
  app.add_option("--format", c.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--jobs", c.jobs, "worker threads (0 = hardware concurrency)");
  app.add_option("--out", c.out, "write output to this file");

  Handler handler;
  std::string command;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, Handler h) {
    auto* sub = parent->add_subcommand(name, desc);
    sub->fallthrough();
    sub->callback([&, h, sub, parent] {
      handler = h;
      command = parent->get_name() + " " + sub->get_name();
    });
    return sub;
  };

  HyperArgs ha;
  auto* hyper = app.add_subcommand("hyper", "hyperoperation evaluation and notation")->require_subcommand(1);
  hyper->fallthrough();
  auto* he = leaf(hyper, "eval", "evaluate (n) o_level^order x, or a formula", [&](Context& x) { return hyper_eval(x, ha); });
  he->add_option("--n", ha.n, "copy count");
  he->add_option("--level", ha.level, "level i");
  he->add_option("--order", ha.order, "-> | <- | [s1,...]");
  he->add_option("--x", ha.x, "operand");
  he->add_option("--formula", ha.formula, "formula text, e.g. \"x o2^1 x o2^0 x\"");
  he->add_option("--bind", ha.bind, "symbol binding name=value (repeatable)");
  auto* hc = leaf(hyper, "convert", "flat form <-> tree", [&](Context& x) { return hyper_convert(x, ha); });
  hc->add_option("--formula", ha.formula, "formula text")->required();
  auto* hd = leaf(hyper, "distrib", "higher distributivity check", [&](Context& x) { return hyper_distrib(x, ha); });
  hd->add_option("--level", ha.level, "level i (1..3)");
  hd->add_option("--n", ha.n, "copy count");
  hd->add_option("--x", ha.x, "x");
  hd->add_option("--y", ha.y, "y");
  auto* hz = leaf(hyper, "zero", "(n) o3^-> 0 towers", [&](Context& x) { return hyper_zero(x, ha); });
  hz->add_option("--n", ha.n, "single n (or use --range)");

  FactorArgs fa;
  auto* factor = app.add_subcommand("factor", "usual and hyper factorization")->require_subcommand(1);
  factor->fallthrough();
  leaf(factor, "usual", "prime factorization", [&](Context& x) { return factor_usual(x, fa); })
      ->add_option("--n", fa.n, "integer >= 1")->required();
  leaf(factor, "exp", "exponential-prime test (and brute force)", [&](Context& x) { return factor_exp(x, fa); })
      ->add_option("--n", fa.n, "single n (or use --range)");
  auto* fh = leaf(factor, "hyper3", "constructive o3 factorization", [&](Context& x) { return factor_hyper3(x, fa); });
  fh->add_option("--n", fa.n, "integer >= 2")->required();
  fh->add_option("--level", fa.level, "1, 2 or 3");
  fh->add_flag("--unique", fa.unique, "also run the brute-force uniqueness oracle (q, b <= n)");
  auto* fv = leaf(factor, "verify", "round-trip checks over --range", [&](Context& x) { return factor_verify(x, fa); });
  fv->add_option("--level", fa.level, "1, 2 or 3");
  fv->add_flag("--unique", fa.unique, "also run the brute-force uniqueness oracle (q, b <= n)");

  std::string n_text;
  auto* prime = app.add_subcommand("prime", "generalized units, composites and primes")->require_subcommand(1);
  prime->fallthrough();
  leaf(prime, "sieve", "classify every element of --range", [&](Context& x) { return prime_sieve(x, false); });
  leaf(prime, "classify", "classify one element", [&](Context& x) { return prime_classify(x, n_text); })
      ->add_option("--n", n_text, "element")->required();
  leaf(prime, "set", "prime set of --range (text format = set file)", [&](Context& x) { return prime_sieve(x, true); });

  DiophArgs da;
  auto* dioph = app.add_subcommand("dioph", "Diophantine bridge")->require_subcommand(1);
  dioph->fallthrough();
  auto* ds = leaf(dioph, "solve", "solutions of f = g in a box", [&](Context& x) { return dioph_solve(x, da); });
  ds->add_option("--g-op", da.g_op, "right-hand op g");
  ds->add_option("--box", da.box, "<lo>..<hi> (cube) or one range per variable");
  auto* di = leaf(dioph, "intersect", "common composites of f and g", [&](Context& x) { return dioph_intersect(x, da, false); });
  di->add_option("--g-op", da.g_op, "second op g");
  di->add_option("--h-op", da.h_op, "unary op h: scan h(c) for c in --range");
  auto* dc = leaf(dioph, "cover", "prime/unit cover check", [&](Context& x) { return dioph_intersect(x, da, true); });
  dc->add_option("--g-op", da.g_op, "second op g");
  auto* dg = leaf(dioph, "goldbach", "sums of two base primes", [&](Context& x) { return dioph_goldbach(x, da); });
  dg->add_option("--base-op", da.base_op, "op whose primes form the base set");
  dg->add_option("--base-domain", da.base_domain, "domain of --base-op");
  dg->add_option("--outer", da.outer, "binary op combining two base primes");
  leaf(dioph, "foursquare", "representability scan (default four squares over n0)", [&](Context& x) { return dioph_foursquare(x); });

  LArgs la;
  auto* lser = app.add_subcommand("lseries", "prime combinations and L-series")->require_subcommand(1);
  lser->fallthrough();
  auto add_l = [&](CLI::App* s) {
    s->add_option("--cutoff", la.cutoff, "value cutoff N");
    s->add_option("--size", la.size, "maximum number of leaves");
    s->add_option("--source", la.source, "tac | f")->check(CLI::IsMember({"tac", "f"}));
  };
  add_l(leaf(lser, "tac", "list combinations", [&](Context& x) { return lseries_tac(x, la); }));
  add_l(leaf(lser, "coeffs", "coefficient table c_i", [&](Context& x) { return lseries_coeffs(x, la); }));
  auto* le = leaf(lser, "eval", "partial L-series, zeta and defect", [&](Context& x) { return lseries_eval(x, la); });
  add_l(le);
  le->add_option("--s", la.s, "exponent: integer, p/q or decimal, > 1");

  ModArgs ma;
  auto* mod = app.add_subcommand("mod", "generalized congruences and Fermat extensions")->require_subcommand(1);
  mod->fallthrough();
  auto add_pair = [&](CLI::App* s) {
    s->add_option("--g-op", ma.g_op, "g");
    s->add_option("--g-inv", ma.g_inv, "inverse of g");
    s->add_option("--side", ma.side, "right | left");
  };
  auto* mc = leaf(mod, "congruent", "c ≡_g b (mod_f m), f = --op", [&](Context& x) { return mod_congruent(x, ma); });
  mc->add_option("--c", ma.c, "c");
  mc->add_option("--b", ma.b, "b");
  mc->add_option("--m", ma.m, "m");
  add_pair(mc);
  auto* mf = leaf(mod, "fold", "right-nested power fold", [&](Context& x) { return mod_fold(x, ma); });
  mf->add_option("--a", ma.a, "a");
  mf->add_option("--p", ma.p, "occurrences p");
  auto* mk = leaf(mod, "fermat-kxy", "Fermat extension for k*x*y", [&](Context& x) { return mod_fermat_kxy(x, ma); });
  mk->add_option("--k", ma.k, "k");
  mk->add_option("--a", ma.a, "a");
  mk->add_option("--p", ma.p, "prime p");
  mk->add_option("--kmax", ma.kmax, "grid: k in [1,kmax]");
  mk->add_option("--amax", ma.amax, "grid: a in [1,amax]");
  mk->add_option("--pmax", ma.pmax, "grid: primes p < pmax");
  auto* ml = leaf(mod, "fermat-linear", "Fermat extension for u*x+v*y", [&](Context& x) { return mod_fermat_linear(x, ma); });
  ml->set_help_flag("--help", "Print this help message and exit");
  ml->add_option("--u", ma.u, "u (default h(v-1))");
  ml->add_option("--v", ma.v, "v");
  ml->add_option("--h", ma.h, "h");
  ml->add_option("--k", ma.k, "k");
  ml->add_option("--p", ma.p, "prime p");
  ml->add_option("--h-range", ma.hrange, "grid: h range");
  ml->add_option("--v-range", ma.vrange, "grid: v range");
  ml->add_option("--kmax", ma.kmax, "grid: k in [1,kmax]");
  ml->add_option("--pmax", ma.pmax, "grid: primes p < pmax");
  auto* mi = leaf(mod, "inverse-check", "check an inverse pair on samples", [&](Context& x) { return mod_inverse_check(x, ma); });
  add_pair(mi);
  mi->add_option("--sample", ma.sample, "sample bound");

  std::string profile = "quick";
  bool tamper = false;
  auto* ver = app.add_subcommand("verify", "acceptance suite")->require_subcommand(1);
  ver->fallthrough();
  auto* va = leaf(ver, "all", "run every acceptance criterion", [&](Context& x) { return verify_all(x, profile, tamper); });
  va->add_option("--profile", profile, "quick | full")->check(CLI::IsMember({"quick", "full"}));
  va->add_flag("--tamper", tamper, "perturb the k*x*y closed form (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (c.jobs == 0) c.jobs = nt::default_jobs();
    if (c.max_bits) ctx.limits.max_bits = *c.max_bits;
    const auto format = nt::report::parse_format(c.format);
    ctx.manifest.command = command;
    ctx.manifest.jobs = c.jobs;
    // Parameters actually given, jobs/format/out excluded.
    auto record = [&](const CLI::App* a) {
      for (const auto* o : a->get_options()) {
        const std::string name = o->get_name(false, true);
        if (o->count() == 0 || name == "--help" || name == "--jobs" || name == "--format" || name == "--out") continue;
        const auto& res = o->results();
        if (res.size() == 1) {
          ctx.manifest.params[name.substr(2)] = res[0];
        } else {
          ctx.manifest.params[name.substr(2)] = res;
        }
      }
    };
    record(&app);
    for (const auto* s1 : app.get_subcommands()) {
      for (const auto* s2 : s1->get_subcommands()) record(s2);
    }
    const auto t0 = std::chrono::steady_clock::now();
    auto out = handler(ctx);
    ctx.manifest.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const std::string text = nt::report::render(ctx.manifest, out, format);
    if (c.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(c.out);
      if (!f) throw UsageError("cannot write '" + c.out + "'");
      f << text;
    }
    return out.exit_code;
  } catch (const nt::TooLarge& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kTooLarge;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const nt::SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return kUsage;
  } catch (const nt::Ambiguous& e) {
    std::cerr << "ambiguous: " << e.what() << "\n";
    return kUsage;
  } catch (const nt::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kViolation;
  }
}
