#pragma once

// Shared search primitives over OpSpec argument boxes. Internal to nt_core.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "nt/op_expr.hpp"

namespace nt::detail {

/// Domain elements in [-radius, radius], ascending.
inline std::vector<std::int64_t> box_elements(const DomainSpec& d, std::int64_t radius) {
  return d.elements_in(-radius, radius);
}

/// Lower anchor used for "other arguments at their minimum": the domain
/// minimum when bounded below, else 0.
inline std::int64_t anchor(const DomainSpec& d) { return d.min().value_or(0); }

inline bool is_natural(const DomainSpec& d) {
  return d.tag() == DomainSpec::Tag::N0 || d.tag() == DomainSpec::Tag::N1;
}

/// Visits assignments of `free` positions (other entries of `args` stay as
/// given) in lexicographic order over the per-position `choices`.
/// With `prune_hi`, the op must be nondecreasing in every argument and the
/// choices ascending: a prefix is abandoned once the value with every later
/// free position at `floor` exceeds *prune_hi.
/// visit(args, result) returns false to stop; the function then returns false.
template <typename Visit>
bool enumerate_box(Evaluator& ev, std::vector<std::int64_t>& args, const std::vector<int>& free,
                   const std::vector<const std::vector<std::int64_t>*>& choices,
                   std::optional<std::int64_t> prune_hi, std::int64_t floor, Visit&& visit,
                   std::size_t depth = 0) {
  if (depth == free.size()) return visit(args, ev.eval(args));
  const auto p = static_cast<std::size_t>(free[depth]);
  const bool last = depth + 1 == free.size();
  for (std::int64_t c : *choices[depth]) {
    args[p] = c;
    if (prune_hi) {
      for (std::size_t k = depth + 1; k < free.size(); ++k) args[static_cast<std::size_t>(free[k])] = floor;
      auto r = ev.eval_raw(args);
      if (r.status != Evaluator::Status::Value || r.value > *prune_hi) break;
      if (last) {
        if (!ev.op().domain.contains(r.value)) r.status = Evaluator::Status::Undefined;
        if (!visit(args, r)) return false;
        continue;
      }
    }
    if (!enumerate_box(ev, args, free, choices, prune_hi, floor, visit, depth + 1)) return false;
  }
  return true;
}

/// Finds the lexicographically first assignment of the positions in `free`
/// with f(args) == target and accept(position, value) for every free
/// position. The last free position is solved exactly when f is affine in
/// it, by bisection when f is monotone, and by scanning otherwise.
/// `tainted` is set when an evaluation hit the bit budget and could not be
/// ruled out by monotonicity.
template <typename Accept>
std::optional<std::vector<std::int64_t>> find_args(Evaluator& ev, const OpTraits& traits,
                                                   std::vector<std::int64_t> args, const std::vector<int>& free,
                                                   const std::vector<std::int64_t>& box, std::int64_t target,
                                                   Accept&& accept, bool* tainted = nullptr) {
  using S = Evaluator::Status;
  const auto& dom = ev.op().domain;
  if (free.empty()) {
    auto r = ev.eval(args);
    if (r.status == S::Value && r.value == target) return args;
    return std::nullopt;
  }
  const bool mono = traits.monotone;
  const std::int64_t floor = anchor(dom);
  const auto last = static_cast<std::size_t>(free.back());
  const bool affine_last = traits.degree[last] == 1;
  const std::int64_t box_lo = box.empty() ? 0 : box.front();
  const std::int64_t box_hi = box.empty() ? -1 : box.back();

  auto try_last = [&](std::vector<std::int64_t>& a) -> bool {
    auto check = [&](std::int64_t c) {
      if (c < box_lo || c > box_hi || !dom.contains(c)) return false;
      a[last] = c;
      auto r = ev.eval(a);
      if (r.status == S::TooLarge && tainted) *tainted = true;
      return r.status == S::Value && r.value == target && accept(static_cast<int>(last), c);
    };
    if (affine_last) {
      a[last] = 0;
      auto r0 = ev.eval_raw(a);
      a[last] = 1;
      auto r1 = ev.eval_raw(a);
      if (r0.status == S::Value && r1.status == S::Value) {
        std::int64_t beta = 0;
        if (!sub_overflow(r1.value, r0.value, beta)) {
          if (beta != 0) {
            std::int64_t num = 0;
            if (sub_overflow(target, r0.value, num)) return false;
            if (num % beta != 0) return false;
            return check(num / beta);
          }
          if (r0.value != target) return false;
          for (std::int64_t c : box) {
            if (check(c)) return true;
          }
          return false;
        }
      } else if (r0.status == S::Undefined && r1.status == S::Undefined) {
        return false;
      }
    }
    if (mono) {
      // Smallest index whose value reaches target.
      std::size_t lo = 0, hi = box.size();
      while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        a[last] = box[mid];
        auto r = ev.eval_raw(a);
        if (r.status != S::Value || r.value >= target) {
          hi = mid;
        } else {
          lo = mid + 1;
        }
      }
      for (std::size_t i = lo; i < box.size(); ++i) {
        a[last] = box[i];
        auto r = ev.eval_raw(a);
        if (r.status != S::Value || r.value != target) break;
        if (check(box[i])) return true;
      }
      return false;
    }
    for (std::int64_t c : box) {
      if (check(c)) return true;
    }
    return false;
  };

  std::optional<std::vector<std::int64_t>> found;
  // Depth-first over all but the last free position.
  auto rec = [&](auto&& self, std::size_t depth) -> bool {
    if (depth + 1 == free.size()) {
      if (try_last(args)) {
        found = args;
        return true;
      }
      return false;
    }
    const auto p = static_cast<std::size_t>(free[depth]);
    for (std::int64_t c : box) {
      args[p] = c;
      if (mono) {
        for (std::size_t k = depth + 1; k < free.size(); ++k) args[static_cast<std::size_t>(free[k])] = floor;
        auto r = ev.eval_raw(args);
        if (r.status != S::Value || r.value > target) break;
      }
      if (!accept(static_cast<int>(p), c)) continue;
      if (self(self, depth + 1)) return true;
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

}  // namespace nt::detail
