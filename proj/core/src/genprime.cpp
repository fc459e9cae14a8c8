#include "nt/genprime.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "nt/parallel.hpp"
#include "search.hpp"

namespace nt {

using detail::anchor;
using detail::box_elements;
using detail::is_natural;
using S = Evaluator::Status;

std::string CertBounds::to_string() const {
  std::ostringstream os;
  os << "span=[" << span_lo << "," << span_hi << "] radius=" << radius << " depth=" << depth;
  return os.str();
}

CertBounds default_bounds(const OpSpec& op, std::int64_t window_lo, std::int64_t window_hi) {
  CertBounds b;
  const auto& d = op.domain;
  if (d.finite()) {
    b.span_lo = *d.min();
    b.span_hi = *d.max();
    b.radius = std::max(std::abs(*d.min()), std::abs(*d.max()));
    return b;
  }
  b.span_lo = std::max<std::int64_t>(-32, d.min().value_or(-32));
  b.span_hi = 32;
  b.radius = 256;
  if (is_natural(d) && analyze(op).monotone) {
    b.radius = std::max<std::int64_t>({256, std::abs(window_lo), std::abs(window_hi)});
  }
  return b;
}

Semantics Semantics::parse(std::string_view text) {
  if (text == "top") return top();
  if (text.substr(0, 5) == "deep:") {
    auto v = parse_bigint(text.substr(5));
    if (v && *v >= 1 && *v <= 16) return deep(static_cast<int>(v->get_si()));
  }
  throw SyntaxError("semantics must be 'top' or 'deep:<d>' with 1 <= d <= 16", 0);
}

std::string Semantics::to_string() const {
  return kind == Kind::TopLevel ? "top" : "deep:" + std::to_string(depth);
}

std::string Witness::to_string() const {
  if (is_leaf()) return std::to_string(value);
  std::string out = "f(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ',';
    out += args[i].to_string();
  }
  return out + ')';
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Unit: return "unit";
    case Verdict::Composite: return "composite";
    case Verdict::Prime: return "prime";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

Witness leaf(std::int64_t v) { return Witness{v, {}}; }

Witness node_of(std::int64_t value, std::span<const std::int64_t> args) {
  Witness w{value, {}};
  for (auto a : args) w.args.push_back(leaf(a));
  return w;
}

// Finite domains small enough for exhaustive unit tests.
constexpr double kExhaustiveLimit = 4e6;

std::vector<std::int64_t> all_elements(const DomainSpec& d) { return d.elements_in(*d.min(), *d.max()); }

Certified<bool> unit_test_impl(Evaluator& ev, const OpTraits& tr, const CertBounds& b, int pos, std::int64_t u) {
  const OpSpec& op = ev.op();
  const DomainSpec& dom = op.domain;
  const int n = op.arity;
  const auto up = static_cast<std::size_t>(pos);
  if (!dom.contains(u) || pos < 0 || pos >= n) return {false, true};

  std::vector<int> free;
  for (int j = 0; j < n; ++j) {
    if (j != pos) free.push_back(j);
  }

  auto cover = [&](const std::vector<std::int64_t>& targets, const std::vector<std::int64_t>& box, bool prune) {
    if (targets.empty()) return true;
    const std::int64_t lo = targets.front(), hi = targets.back();
    std::vector<char> hit(static_cast<std::size_t>(hi - lo + 1), 0);
    std::size_t remaining = targets.size();
    std::vector<char> wanted(hit.size(), 0);
    for (auto t : targets) wanted[static_cast<std::size_t>(t - lo)] = 1;
    std::vector<std::int64_t> args(static_cast<std::size_t>(n), anchor(dom));
    args[up] = u;
    std::vector<const std::vector<std::int64_t>*> choices(free.size(), &box);
    std::optional<std::int64_t> prune_hi;
    if (prune) prune_hi = hi;
    detail::enumerate_box(ev, args, free, choices, prune_hi, anchor(dom), [&](const auto&, Evaluator::Result r) {
      if (r.status == S::Value && r.value >= lo && r.value <= hi) {
        const auto k = static_cast<std::size_t>(r.value - lo);
        if (wanted[k] && !hit[k]) {
          hit[k] = 1;
          if (--remaining == 0) return false;
        }
      }
      return true;
    });
    return remaining == 0;
  };

  if (dom.finite()) {
    const auto elems = all_elements(dom);
    if (std::pow(static_cast<double>(elems.size()), n - 1) <= kExhaustiveLimit) {
      return {cover(elems, elems, false), true};
    }
  }

  if (free.empty()) return {false, true};  // a single value cannot cover an infinite domain

  // Affine in another argument: exact decision (binary), or proof of
  // surjectivity with the remaining arguments pinned (n-ary).
  const bool integers = dom.tag() == DomainSpec::Tag::Z;
  for (int j : free) {
    const auto jp = static_cast<std::size_t>(j);
    if (tr.degree[jp] == 0 && n == 2) return {false, true};
    if (tr.degree[jp] != 1) continue;
    std::vector<std::int64_t> args(static_cast<std::size_t>(n), anchor(dom));
    args[up] = u;
    args[jp] = 0;
    auto r0 = ev.eval_raw(args);
    args[jp] = 1;
    auto r1 = ev.eval_raw(args);
    if (n == 2 && r0.status == S::Undefined && r1.status == S::Undefined) return {false, true};
    if (r0.status != S::Value || r1.status != S::Value) continue;
    std::int64_t beta = 0;
    if (sub_overflow(r1.value, r0.value, beta)) continue;
    const bool surj = integers ? (beta == 1 || beta == -1) : (beta == 1 && r0.value <= 0);
    if (surj) return {true, true};
    if (n == 2) return {false, true};
  }

  // Nondecreasing ops cannot go below f(min, ..., u, ..., min).
  if (tr.monotone && is_natural(dom)) {
    std::vector<std::int64_t> args(static_cast<std::size_t>(n), *dom.min());
    args[up] = u;
    auto r = ev.eval_raw(args);
    if (r.status == S::Huge || r.status == S::TooLarge || (r.status == S::Value && r.value > *dom.min())) {
      return {false, true};
    }
  }

  const auto targets = dom.elements_in(b.span_lo, b.span_hi);
  const auto box = box_elements(dom, b.radius);
  return {cover(targets, box, tr.monotone && is_natural(dom)), false};
}

}  // namespace

UnitOracle::UnitOracle(const OpSpec& op, CertBounds bounds, EvalLimits limits)
    : op_(op), traits_(analyze(op)), bounds_(bounds), limits_(limits) {}

Certified<bool> UnitOracle::test(int position, std::int64_t u) const {
  {
    std::lock_guard lock(mu_);
    auto it = cache_.find(u * 64 + position);
    if (it != cache_.end()) return it->second;
  }
  Evaluator ev(op_, limits_);
  return test(ev, position, u);
}

Certified<bool> UnitOracle::test(Evaluator& ev, int position, std::int64_t u) const {
  const std::int64_t key = u * 64 + position;
  {
    std::lock_guard lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  auto r = unit_test_impl(ev, traits_, bounds_, position, u);
  std::lock_guard lock(mu_);
  cache_.emplace(key, r);
  return r;
}

Certified<bool> is_nary_unit(const OpSpec& op, std::int64_t u, int position, const CertBounds& bounds) {
  Evaluator ev(op);
  return unit_test_impl(ev, analyze(op), bounds, position, u);
}

std::optional<std::int64_t> unit_witness(const OpSpec& op, std::int64_t u, std::int64_t k, const CertBounds& bounds,
                                         int position) {
  if (op.arity != 2) throw DomainError("unit_witness needs a binary op");
  Evaluator ev(op);
  const auto tr = analyze(op);
  const int other = 1 - position;
  std::vector<std::int64_t> args(2);
  args[static_cast<std::size_t>(position)] = u;
  auto value_at = [&](std::int64_t b) {
    args[static_cast<std::size_t>(other)] = b;
    return ev.eval(args);
  };
  if (tr.degree[static_cast<std::size_t>(other)] == 1) {
    args[static_cast<std::size_t>(other)] = 0;
    auto r0 = ev.eval_raw(args);
    args[static_cast<std::size_t>(other)] = 1;
    auto r1 = ev.eval_raw(args);
    if (r0.status == S::Value && r1.status == S::Value && r1.value != r0.value) {
      const std::int64_t beta = r1.value - r0.value;
      if ((k - r0.value) % beta == 0) {
        const std::int64_t b = (k - r0.value) / beta;
        auto r = value_at(b);
        if (r.status == S::Value && r.value == k) return b;
      }
      return std::nullopt;
    }
  }
  // Nearest to zero first: 0, 1, -1, 2, -2, ...
  for (std::int64_t m = 0; m <= bounds.radius; ++m) {
    for (std::int64_t b : {m, -m}) {
      if (b == -m && m == 0) break;
      if (!op.domain.contains(b)) continue;
      auto r = value_at(b);
      if (r.status == S::Value && r.value == k) return b;
    }
  }
  return std::nullopt;
}

namespace {

Certified<bool> zero_test(const OpSpec& op, std::int64_t z, const CertBounds& bounds, int pos) {
  if (op.arity != 2) throw DomainError("zero tests need a binary op");
  const auto& dom = op.domain;
  if (!dom.contains(z)) return {false, true};
  Evaluator ev(op);
  const bool exhaustive = dom.finite();
  const auto ks = exhaustive ? all_elements(dom) : dom.elements_in(bounds.span_lo, bounds.span_hi);
  std::vector<std::int64_t> args(2);
  args[static_cast<std::size_t>(pos)] = z;
  for (auto k : ks) {
    args[static_cast<std::size_t>(1 - pos)] = k;
    auto r = ev.eval(args);
    if (r.status != S::Value || r.value != z) return {false, true};
  }
  return {true, exhaustive};
}

}  // namespace

Certified<bool> is_left_zero(const OpSpec& op, std::int64_t z, const CertBounds& bounds) {
  return zero_test(op, z, bounds, 0);
}
Certified<bool> is_right_zero(const OpSpec& op, std::int64_t z, const CertBounds& bounds) {
  return zero_test(op, z, bounds, 1);
}

namespace {

std::optional<Witness> composite_witness_with(Evaluator& ev, const UnitOracle& oracle, std::int64_t m,
                                              bool* tainted) {
  const OpSpec& op = ev.op();
  const auto box = box_elements(op.domain, oracle.bounds().radius);
  std::vector<int> free(static_cast<std::size_t>(op.arity));
  for (int j = 0; j < op.arity; ++j) free[static_cast<std::size_t>(j)] = j;
  std::vector<std::int64_t> args(static_cast<std::size_t>(op.arity), anchor(op.domain));
  auto found = detail::find_args(
      ev, oracle.traits(), args, free, box, m,
      [&](int pos, std::int64_t v) { return !oracle.test(ev, pos, v).value; }, tainted);
  if (!found) return std::nullopt;
  return node_of(m, *found);
}

// Values reachable by a representation of depth <= d containing a
// qualifying application, each with its first-found witness.
std::map<std::int64_t, Witness> deep_values(Evaluator& ev, const UnitOracle& oracle, int depth, bool* tainted) {
  const OpSpec& op = ev.op();
  if (op.arity != 2) throw DomainError("deep semantics needs a binary op");
  const std::int64_t radius = oracle.bounds().radius;
  const auto box = box_elements(op.domain, radius);
  std::vector<std::int64_t> left, right;
  for (auto v : box) {
    if (!oracle.test(ev, 0, v).value) left.push_back(v);
    if (!oracle.test(ev, 1, v).value) right.push_back(v);
  }
  std::map<std::int64_t, Witness> q;
  auto keep = [&](Evaluator::Result r) {
    if (r.status == S::TooLarge && !oracle.traits().monotone && tainted) *tainted = true;
    return r.status == S::Value && r.value >= -radius && r.value <= radius;
  };
  std::vector<std::int64_t> args(2);
  for (auto a : left) {
    for (auto b : right) {
      args = {a, b};
      auto r = ev.eval(args);
      if (keep(r) && !q.count(r.value)) q.emplace(r.value, node_of(r.value, args));
    }
  }
  std::vector<std::int64_t> frontier;
  for (const auto& [v, w] : q) frontier.push_back(v);
  for (int level = 2; level <= depth && !frontier.empty(); ++level) {
    std::map<std::int64_t, Witness> fresh;
    for (auto qv : frontier) {
      for (auto a : box) {
        for (int side = 0; side < 2; ++side) {
          args = side == 0 ? std::vector<std::int64_t>{qv, a} : std::vector<std::int64_t>{a, qv};
          auto r = ev.eval(args);
          if (!keep(r) || q.count(r.value) || fresh.count(r.value)) continue;
          Witness w{r.value, {}};
          if (side == 0) {
            w.args = {q.at(qv), leaf(a)};
          } else {
            w.args = {leaf(a), q.at(qv)};
          }
          fresh.emplace(r.value, std::move(w));
        }
      }
    }
    frontier.clear();
    for (auto& [v, w] : fresh) {
      frontier.push_back(v);
      q.emplace(v, std::move(w));
    }
  }
  return q;
}

bool qualifies_with(Evaluator& ev, const UnitOracle& oracle, std::span<const std::int64_t> args) {
  auto r = ev.eval(args);
  if (r.status != S::Value) return false;
  for (std::size_t j = 0; j < args.size(); ++j) {
    if (oracle.test(ev, static_cast<int>(j), args[j]).value) return false;
  }
  return true;
}

// Evaluates a witness; nullopt when some application is undefined.
std::optional<std::int64_t> witness_value(Evaluator& ev, const Witness& w) {
  if (w.is_leaf()) return w.value;
  std::vector<std::int64_t> args;
  for (const auto& a : w.args) {
    auto v = witness_value(ev, a);
    if (!v) return std::nullopt;
    args.push_back(*v);
  }
  auto r = ev.eval(args);
  if (r.status != S::Value) return std::nullopt;
  return r.value;
}

bool contains_qualifying(Evaluator& ev, const UnitOracle& oracle, const Witness& w) {
  if (w.is_leaf()) return false;
  std::vector<std::int64_t> args;
  for (const auto& a : w.args) {
    auto v = witness_value(ev, a);
    if (!v) return false;
    args.push_back(*v);
  }
  if (qualifies_with(ev, oracle, args)) return true;
  return std::any_of(w.args.begin(), w.args.end(), [&](const Witness& a) { return contains_qualifying(ev, oracle, a); });
}

std::uint32_t unit_bits(Evaluator& ev, const UnitOracle& oracle, std::int64_t m, std::uint32_t& proven) {
  std::uint32_t mask = 0;
  proven = 0;
  for (int j = 0; j < ev.op().arity && j < 32; ++j) {
    auto c = oracle.test(ev, j, m);
    if (c.value) mask |= 1u << j;
    if (c.proven) proven |= 1u << j;
  }
  return mask;
}

bool prime_is_exhaustive(const OpSpec& op, const CertBounds& b) {
  if (!op.domain.finite()) return false;
  return b.radius >= std::max(std::abs(*op.domain.min()), std::abs(*op.domain.max()));
}

void finish_unit(Classification& c, std::uint32_t mask, std::uint32_t proven) {
  c.unit_mask = mask;
  c.unit_proven_mask = proven;
  if (mask) {
    c.verdict = Verdict::Unit;
    c.proven = (mask & proven) != 0;
  }
}

}  // namespace

std::optional<Witness> find_composite_witness(const OpSpec& op, std::int64_t m, const CertBounds& bounds) {
  Evaluator ev(op);
  UnitOracle oracle(op, bounds);
  return composite_witness_with(ev, oracle, m, nullptr);
}

bool qualifies(const OpSpec& op, std::span<const std::int64_t> args, const CertBounds& bounds) {
  if (args.size() != static_cast<std::size_t>(op.arity)) return false;
  Evaluator ev(op);
  UnitOracle oracle(op, bounds);
  return qualifies_with(ev, oracle, args);
}

bool verify_witness(const OpSpec& op, const Witness& w, std::int64_t m, const CertBounds& bounds,
                    Semantics semantics) {
  Evaluator ev(op);
  UnitOracle oracle(op, bounds);
  auto v = witness_value(ev, w);
  if (!v || *v != m || w.is_leaf()) return false;
  if (semantics.kind == Semantics::Kind::TopLevel) {
    std::vector<std::int64_t> args;
    for (const auto& a : w.args) args.push_back(*witness_value(ev, a));
    return qualifies_with(ev, oracle, args);
  }
  return contains_qualifying(ev, oracle, w);
}

Classification classify(const OpSpec& op, std::int64_t m, const CertBounds& bounds, Semantics semantics,
                        EvalLimits limits) {
  if (!op.domain.contains(m)) throw DomainError(std::to_string(m) + " is not in the domain " + op.domain.to_string());
  Evaluator ev(op, limits);
  UnitOracle oracle(op, bounds, limits);
  Classification c;
  c.n = m;
  std::uint32_t proven = 0;
  const std::uint32_t mask = unit_bits(ev, oracle, m, proven);
  finish_unit(c, mask, proven);
  if (mask) return c;
  bool tainted = false;
  std::optional<Witness> w;
  if (semantics.kind == Semantics::Kind::TopLevel) {
    w = composite_witness_with(ev, oracle, m, &tainted);
  } else {
    auto q = deep_values(ev, oracle, semantics.depth, &tainted);
    if (auto it = q.find(m); it != q.end()) w = it->second;
  }
  if (w) {
    c.verdict = Verdict::Composite;
    c.proven = true;
    c.witness = std::move(w);
  } else if (tainted) {
    c.verdict = Verdict::Unknown;
  } else {
    c.verdict = Verdict::Prime;
    c.proven = proven == (op.arity >= 32 ? ~0u : (1u << op.arity) - 1) && prime_is_exhaustive(op, bounds);
  }
  return c;
}

const Classification* SieveTable::find(std::int64_t n) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), n,
                             [](const Classification& c, std::int64_t v) { return c.n < v; });
  if (it == entries.end() || it->n != n) return nullptr;
  return &*it;
}

std::vector<std::int64_t> SieveTable::with(Verdict v) const {
  std::vector<std::int64_t> out;
  for (const auto& c : entries) {
    if (c.verdict == v) out.push_back(c.n);
  }
  return out;
}

std::map<std::int64_t, std::vector<std::int64_t>> qualifying_image(const UnitOracle& oracle, std::int64_t lo,
                                                                   std::int64_t hi, unsigned jobs, bool* tainted) {
  const OpSpec& op = oracle.op();
  const EvalLimits& limits = oracle.limits();
  const bool natural_mono = oracle.traits().monotone && is_natural(op.domain);
  const auto box = box_elements(op.domain, oracle.bounds().radius);
  const auto arity = static_cast<std::size_t>(op.arity);
  constexpr std::size_t kChunk = 4096;

  // Per position, the box elements that are not units there.
  std::vector<std::vector<std::int64_t>> nonunit(arity);
  {
    std::vector<std::vector<char>> is_unit(arity, std::vector<char>(box.size(), 0));
    const std::size_t chunks = (box.size() + kChunk - 1) / kChunk;
    parallel_for(chunks, jobs, [&](std::size_t c) {
      Evaluator ev(op, limits);
      for (std::size_t i = c * kChunk; i < std::min(box.size(), (c + 1) * kChunk); ++i) {
        for (std::size_t j = 0; j < arity; ++j) is_unit[j][i] = oracle.test(ev, static_cast<int>(j), box[i]).value;
      }
    });
    for (std::size_t j = 0; j < arity; ++j) {
      for (std::size_t i = 0; i < box.size(); ++i) {
        if (!is_unit[j][i]) nonunit[j].push_back(box[i]);
      }
    }
  }

  // Partitioned on the first argument; the earliest chunk wins so the kept
  // arguments are the lexicographically first ones.
  const auto& first = nonunit[0];
  const std::size_t chunk = std::max<std::size_t>(1, std::min<std::size_t>(256, first.size() / 64 + 1));
  const std::size_t nchunks = (first.size() + chunk - 1) / chunk;
  std::vector<std::map<std::int64_t, std::vector<std::int64_t>>> found(nchunks);
  std::vector<char> chunk_tainted(nchunks, 0);
  parallel_for(nchunks, jobs, [&](std::size_t c) {
    Evaluator ev(op, limits);
    std::vector<std::int64_t> part(first.begin() + static_cast<std::ptrdiff_t>(c * chunk),
                                   first.begin() + static_cast<std::ptrdiff_t>(std::min(first.size(), (c + 1) * chunk)));
    std::vector<const std::vector<std::int64_t>*> choices{&part};
    for (std::size_t j = 1; j < arity; ++j) choices.push_back(&nonunit[j]);
    std::vector<int> free(arity);
    for (std::size_t j = 0; j < arity; ++j) free[j] = static_cast<int>(j);
    std::vector<std::int64_t> args(arity, anchor(op.domain));
    std::optional<std::int64_t> prune;
    if (natural_mono) prune = hi;
    auto& mine = found[c];
    detail::enumerate_box(ev, args, free, choices, prune, anchor(op.domain),
                          [&](const std::vector<std::int64_t>& a, Evaluator::Result r) {
                            if (r.status == S::TooLarge && !natural_mono) chunk_tainted[c] = 1;
                            if (r.status == S::Value && r.value >= lo && r.value <= hi) mine.try_emplace(r.value, a);
                            return true;
                          });
  });
  std::map<std::int64_t, std::vector<std::int64_t>> out;
  for (std::size_t c = 0; c < nchunks; ++c) {
    if (chunk_tainted[c] && tainted) *tainted = true;
    for (auto& [v, a] : found[c]) out.try_emplace(v, std::move(a));
  }
  return out;
}

SieveTable sieve(const OpSpec& op, std::int64_t lo, std::int64_t hi, const CertBounds& bounds, Semantics semantics,
                 unsigned jobs, EvalLimits limits) {
  if (lo > hi) throw DomainError("empty sieve window");
  SieveTable t;
  t.lo = lo;
  t.hi = hi;
  t.op = op;
  t.bounds = bounds;
  t.semantics = semantics;
  const auto window = op.domain.elements_in(lo, hi);
  t.entries.resize(window.size());
  UnitOracle oracle(op, bounds, limits);
  const std::size_t arity = static_cast<std::size_t>(op.arity);

  constexpr std::size_t kChunk = 4096;
  const std::size_t wchunks = (window.size() + kChunk - 1) / kChunk;
  parallel_for(wchunks, jobs, [&](std::size_t c) {
    Evaluator ev(op, limits);
    for (std::size_t i = c * kChunk; i < std::min(window.size(), (c + 1) * kChunk); ++i) {
      auto& e = t.entries[i];
      e.n = window[i];
      std::uint32_t proven = 0;
      finish_unit(e, unit_bits(ev, oracle, e.n, proven), proven);
    }
  });

  bool tainted = false;
  std::map<std::int64_t, Witness> witness;
  if (semantics.kind == Semantics::Kind::TopLevel) {
    for (auto& [v, a] : qualifying_image(oracle, lo, hi, jobs, &tainted)) witness.emplace(v, node_of(v, a));
  } else {
    Evaluator ev(op, limits);
    witness = deep_values(ev, oracle, semantics.depth, &tainted);
  }

  const std::uint32_t all_bits = arity >= 32 ? ~0u : (1u << arity) - 1;
  const bool exhaustive = prime_is_exhaustive(op, bounds);
  std::vector<std::string> unit_notes;
  for (auto& e : t.entries) {
    if (e.verdict == Verdict::Unit) {
      std::string sides;
      for (std::size_t j = 0; j < arity && j < 32; ++j) {
        if (!e.unit_at(static_cast<int>(j))) continue;
        if (!sides.empty()) sides += ", ";
        sides += arity == 2 ? (j == 0 ? "left-unit" : "right-unit") : "[f," + std::to_string(j + 1) + "]-unit";
      }
      unit_notes.push_back(std::to_string(e.n) + " is a " + sides + "; listed as a unit, not a prime");
      continue;
    }
    if (auto it = witness.find(e.n); it != witness.end()) {
      e.verdict = Verdict::Composite;
      e.proven = true;
      e.witness = std::move(it->second);
    } else if (tainted) {
      e.verdict = Verdict::Unknown;
    } else {
      e.verdict = Verdict::Prime;
      e.proven = e.unit_proven_mask == all_bits && exhaustive;
    }
  }
  if (unit_notes.size() <= 8) {
    t.notes = std::move(unit_notes);
  } else {
    t.notes.push_back(std::to_string(unit_notes.size()) + " window elements are units and are not listed as primes");
  }
  if (tainted) t.notes.push_back("some evaluations exceeded the bit budget; unwitnessed entries are unknown");
  return t;
}

DomainSpec prime_set(const OpSpec& op, std::int64_t lo, std::int64_t hi, const CertBounds& bounds, unsigned jobs) {
  return DomainSpec::explicit_set(sieve(op, lo, hi, bounds, Semantics::top(), jobs).with(Verdict::Prime));
}

}  // namespace nt
