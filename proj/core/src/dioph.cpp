#include "nt/dioph.hpp"

#include <algorithm>
#include <map>

#include "nt/parallel.hpp"
#include "search.hpp"

namespace nt {

using S = Evaluator::Status;

bool SolutionRecord::nowhere_trivial() const {
  auto trivial = [](const Certified<bool>& c) { return c.value; };
  return std::none_of(trivial_x.begin(), trivial_x.end(), trivial) &&
         std::none_of(trivial_y.begin(), trivial_y.end(), trivial);
}

namespace {

// Value -> assignments (odometer order) for every defined point of the box.
std::map<BigInt, std::vector<std::vector<std::int64_t>>> box_values(
    const OpSpec& op, const std::vector<std::pair<std::int64_t, std::int64_t>>& ranges) {
  std::map<BigInt, std::vector<std::vector<std::int64_t>>> out;
  if (ranges.empty()) return out;
  for (const auto& [a, b] : ranges) {
    if (a > b) return out;
  }
  Evaluator ev(op);
  std::vector<std::int64_t> args(ranges.size());
  std::vector<BigInt> big(ranges.size());
  for (std::size_t i = 0; i < ranges.size(); ++i) args[i] = ranges[i].first;
  while (true) {
    auto r = ev.eval(args);
    if (r.status == S::Value) {
      out[BigInt(static_cast<long>(r.value))].push_back(args);
    } else if (r.status == S::Huge) {
      for (std::size_t i = 0; i < args.size(); ++i) big[i] = from_int64(args[i]);
      if (auto v = ev.eval_big(big)) out[*v].push_back(args);
    }
    std::size_t k = args.size();
    while (k > 0) {
      --k;
      if (args[k] < ranges[k].second) {
        ++args[k];
        break;
      }
      args[k] = ranges[k].first;
      if (k == 0) return out;
    }
  }
}

std::vector<std::int64_t> scan_values(std::int64_t lo, std::int64_t hi, const OpSpec* h,
                                      std::map<std::int64_t, std::int64_t>& source) {
  std::vector<std::int64_t> values;
  if (!h) {
    for (std::int64_t c = lo; c <= hi; ++c) {
      values.push_back(c);
      source[c] = c;
    }
    return values;
  }
  if (h->arity != 1) throw DomainError("image op h must be unary");
  Evaluator ev(*h);
  for (std::int64_t c = lo; c <= hi; ++c) {
    const std::int64_t arg[1] = {c};
    auto r = ev.eval(arg);
    if (r.status == S::Value && !source.count(r.value)) {
      source[r.value] = c;
      values.push_back(r.value);
    }
  }
  std::sort(values.begin(), values.end());
  return values;
}

// Composites of op among `values`: qualifying image minus units.
std::map<std::int64_t, std::vector<std::int64_t>> composites_among(const OpSpec& op, const CertBounds& bounds,
                                                                   const std::vector<std::int64_t>& values,
                                                                   unsigned jobs) {
  std::map<std::int64_t, std::vector<std::int64_t>> out;
  if (values.empty()) return out;
  UnitOracle oracle(op, bounds);
  auto image = qualifying_image(oracle, values.front(), values.back(), jobs);
  Evaluator ev(op);
  for (auto& [v, args] : image) {
    if (!std::binary_search(values.begin(), values.end(), v)) continue;
    bool unit = false;
    for (int j = 0; j < op.arity && !unit; ++j) unit = oracle.test(ev, j, v).value;
    if (!unit) out.emplace(v, std::move(args));
  }
  return out;
}

}  // namespace

std::vector<SolutionRecord> solve_box(const OpSpec& f, const OpSpec& g, const SolutionBox& box, unsigned jobs) {
  const auto m = static_cast<std::size_t>(f.arity);
  const auto n = static_cast<std::size_t>(g.arity);
  if (box.ranges.size() != m + n) throw DomainError("box needs one range per variable of f and g");
  const std::vector<std::pair<std::int64_t, std::int64_t>> fr(box.ranges.begin(), box.ranges.begin() + static_cast<std::ptrdiff_t>(m));
  const std::vector<std::pair<std::int64_t, std::int64_t>> gr(box.ranges.begin() + static_cast<std::ptrdiff_t>(m), box.ranges.end());
  auto fv = box_values(f, fr);
  auto gv = box_values(g, gr);
  std::vector<SolutionRecord> out;
  for (const auto& [value, xs] : fv) {
    auto it = gv.find(value);
    if (it == gv.end()) continue;
    for (const auto& x : xs) {
      for (const auto& y : it->second) out.push_back({x, y, value, {}, {}});
    }
  }
  std::sort(out.begin(), out.end(), [](const SolutionRecord& a, const SolutionRecord& b) {
    return std::tie(a.x, a.y) < std::tie(b.x, b.y);
  });
  UnitOracle fo(f, default_bounds(f, 0, 0));
  UnitOracle go(g, default_bounds(g, 0, 0));
  parallel_for(out.size(), jobs, [&](std::size_t i) {
    auto& rec = out[i];
    for (std::size_t j = 0; j < m; ++j) rec.trivial_x.push_back(fo.test(static_cast<int>(j), rec.x[j]));
    for (std::size_t j = 0; j < n; ++j) rec.trivial_y.push_back(go.test(static_cast<int>(j), rec.y[j]));
  });
  return out;
}

Certified<bool> is_trivial_in(const OpSpec& f, std::span<const std::int64_t> solution, int position,
                              const CertBounds& bounds) {
  if (position < 0 || static_cast<std::size_t>(position) >= solution.size()) {
    throw DomainError("position out of range");
  }
  return is_nary_unit(f, solution[static_cast<std::size_t>(position)], position, bounds);
}

std::vector<IntersectionEntry> composite_intersection(const OpSpec& f, const OpSpec& g, std::int64_t lo,
                                                      std::int64_t hi, const CertBounds& f_bounds,
                                                      const CertBounds& g_bounds, const OpSpec* h, unsigned jobs) {
  std::map<std::int64_t, std::int64_t> source;
  const auto values = scan_values(lo, hi, h, source);
  auto fc = composites_among(f, f_bounds, values, jobs);
  auto gc = composites_among(g, g_bounds, values, jobs);
  std::vector<IntersectionEntry> out;
  for (auto& [v, fa] : fc) {
    auto it = gc.find(v);
    if (it == gc.end()) continue;
    out.push_back({v, source.at(v), fa, it->second});
  }
  return out;
}

CoverReport prime_cover_check(const OpSpec& f, const OpSpec& g, std::int64_t lo, std::int64_t hi,
                              const CertBounds& f_bounds, const CertBounds& g_bounds, unsigned jobs) {
  const auto ft = sieve(f, lo, hi, f_bounds, Semantics::top(), jobs);
  const auto gt = sieve(g, lo, hi, g_bounds, Semantics::top(), jobs);
  CoverReport rep;
  auto settled = [](const Classification* c) {
    return !c || c->verdict == Verdict::Prime || c->verdict == Verdict::Unit;
  };
  for (std::int64_t c = lo; c <= hi; ++c) {
    const auto* a = ft.find(c);
    const auto* b = gt.find(c);
    if (settled(a) || settled(b)) continue;
    rep.exceptions.push_back(c);
    if (a->verdict == Verdict::Unknown || b->verdict == Verdict::Unknown) ++rep.unknown;
  }
  rep.covered = rep.exceptions.empty();
  std::vector<std::int64_t> inter;
  for (const auto& e : composite_intersection(f, g, lo, hi, f_bounds, g_bounds, nullptr, jobs)) inter.push_back(e.value);
  rep.consistent = rep.unknown == 0 && inter == rep.exceptions;
  return rep;
}

std::vector<std::optional<std::vector<std::int64_t>>> representable_range(const OpSpec& op, std::int64_t lo,
                                                                          std::int64_t hi, const CertBounds& bounds,
                                                                          unsigned jobs) {
  if (lo > hi) return {};
  UnitOracle oracle(op, bounds);
  const auto box = detail::box_elements(op.domain, bounds.radius);
  std::vector<int> free(static_cast<std::size_t>(op.arity));
  for (int j = 0; j < op.arity; ++j) free[static_cast<std::size_t>(j)] = j;
  const auto count = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::optional<std::vector<std::int64_t>>> out(count);
  constexpr std::size_t kChunk = 256;
  parallel_for((count + kChunk - 1) / kChunk, jobs, [&](std::size_t c) {
    Evaluator ev(op);
    std::vector<std::int64_t> args(free.size(), detail::anchor(op.domain));
    for (std::size_t i = c * kChunk; i < std::min(count, (c + 1) * kChunk); ++i) {
      out[i] = detail::find_args(ev, oracle.traits(), args, free, box, lo + static_cast<std::int64_t>(i),
                                 [&](int pos, std::int64_t v) { return !oracle.test(ev, pos, v).value; });
    }
  });
  return out;
}

std::optional<std::vector<std::int64_t>> representable(const OpSpec& op, std::int64_t n, const CertBounds& bounds) {
  return representable_range(op, n, n, bounds).front();
}

std::vector<std::int64_t> cover_scan(const std::vector<std::int64_t>& base, const OpSpec& outer, std::int64_t lo,
                                     std::int64_t hi, unsigned jobs) {
  if (outer.arity != 2) throw DomainError("cover_scan needs a binary outer op");
  if (!std::is_sorted(base.begin(), base.end()) || std::adjacent_find(base.begin(), base.end()) != base.end()) {
    throw DomainError("base set must be strictly increasing");
  }
  std::vector<std::int64_t> failures;
  if (lo > hi) return failures;
  if (base.empty()) {
    for (std::int64_t n = lo; n <= hi; ++n) failures.push_back(n);
    return failures;
  }
  const auto traits = analyze(outer);
  // Monotone pruning needs base elements inside the op's natural domain.
  const bool mono = traits.monotone && outer.domain.contains(base.front());
  const std::int64_t blo = base.front(), bhi = base.back();
  std::vector<char> member;
  const bool dense = bhi - blo < (std::int64_t{1} << 28);
  if (dense) {
    member.assign(static_cast<std::size_t>(bhi - blo + 1), 0);
    for (auto v : base) member[static_cast<std::size_t>(v - blo)] = 1;
  }
  auto in_base = [&](std::int64_t v) {
    if (v < blo || v > bhi) return false;
    return dense ? member[static_cast<std::size_t>(v - blo)] != 0 : std::binary_search(base.begin(), base.end(), v);
  };
  const auto count = static_cast<std::size_t>(hi - lo + 1);
  std::vector<char> ok(count, 0);
  constexpr std::size_t kChunk = 1024;
  parallel_for((count + kChunk - 1) / kChunk, jobs, [&](std::size_t c) {
    Evaluator ev(outer);
    std::int64_t args[2];
    for (std::size_t i = c * kChunk; i < std::min(count, (c + 1) * kChunk); ++i) {
      const std::int64_t n = lo + static_cast<std::int64_t>(i);
      for (std::int64_t p : base) {
        args[0] = p;
        if (mono) {
          args[1] = blo;
          auto r = ev.eval_raw(args);
          if (r.status != S::Value || r.value > n) break;
        }
        if (traits.degree[1] == 1) {
          args[1] = 0;
          auto r0 = ev.eval_raw(args);
          args[1] = 1;
          auto r1 = ev.eval_raw(args);
          if (r0.status == S::Value && r1.status == S::Value) {
            const std::int64_t beta = r1.value - r0.value;
            if (beta == 0) {
              if (r0.value == n) { ok[i] = 1; break; }
              continue;
            }
            if ((n - r0.value) % beta != 0) continue;
            const std::int64_t q = (n - r0.value) / beta;
            if (in_base(q)) { ok[i] = 1; break; }
            continue;
          }
        }
        bool hit = false;
        for (std::int64_t q : base) {
          args[1] = q;
          auto r = ev.eval_raw(args);
          if (r.status == S::Value && r.value == n) { hit = true; break; }
          if (mono && (r.status != S::Value || r.value > n)) break;
        }
        if (hit) { ok[i] = 1; break; }
      }
    }
  });
  for (std::size_t i = 0; i < count; ++i) {
    if (!ok[i]) failures.push_back(lo + static_cast<std::int64_t>(i));
  }
  return failures;
}

}  // namespace nt
