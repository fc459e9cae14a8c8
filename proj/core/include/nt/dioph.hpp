#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nt/genprime.hpp"

namespace nt {

/// Per-variable ranges: f's variables first, then g's.
struct SolutionBox {
  std::vector<std::pair<std::int64_t, std::int64_t>> ranges;

  static SolutionBox cube(int vars, std::int64_t lo, std::int64_t hi) {
    return {std::vector<std::pair<std::int64_t, std::int64_t>>(static_cast<std::size_t>(vars), {lo, hi})};
  }
};

struct SolutionRecord {
  std::vector<std::int64_t> x;  // f's arguments
  std::vector<std::int64_t> y;  // g's arguments
  BigInt value;
  std::vector<Certified<bool>> trivial_x;
  std::vector<Certified<bool>> trivial_y;

  bool nowhere_trivial() const;
};

/// All assignments in the box with f(x) = g(y), sorted by (x, y), each with
/// triviality verdicts at default bounds.
std::vector<SolutionRecord> solve_box(const OpSpec& f, const OpSpec& g, const SolutionBox& box, unsigned jobs = 1);

/// With x_i fixed at solution[i], the remaining arguments reach every c in
/// the span (the positional unit test at solution[i]).
Certified<bool> is_trivial_in(const OpSpec& f, std::span<const std::int64_t> solution, int position,
                              const CertBounds& bounds);

struct IntersectionEntry {
  std::int64_t value = 0;  // the scanned value (h(c) when an image op is given)
  std::int64_t source = 0; // c
  std::vector<std::int64_t> f_args;
  std::vector<std::int64_t> g_args;
};

/// Values in the window (or in the image h(window) of a unary op h) that are
/// composites of both f and g under TopLevel semantics, args within the
/// respective bounds' radius.
std::vector<IntersectionEntry> composite_intersection(const OpSpec& f, const OpSpec& g, std::int64_t lo,
                                                      std::int64_t hi, const CertBounds& f_bounds,
                                                      const CertBounds& g_bounds, const OpSpec* h = nullptr,
                                                      unsigned jobs = 1);

struct CoverReport {
  bool covered = false;
  std::vector<std::int64_t> exceptions;  // neither f-/g-prime nor a unit of either
  bool consistent = false;               // exceptions == composite_intersection values
  std::size_t unknown = 0;
};

CoverReport prime_cover_check(const OpSpec& f, const OpSpec& g, std::int64_t lo, std::int64_t hi,
                              const CertBounds& f_bounds, const CertBounds& g_bounds, unsigned jobs = 1);

/// Lexicographically first arguments, none a unit at its position, with
/// f(args) = n.
std::optional<std::vector<std::int64_t>> representable(const OpSpec& op, std::int64_t n, const CertBounds& bounds);
/// Same, sharing unit tests across many targets.
std::vector<std::optional<std::vector<std::int64_t>>> representable_range(const OpSpec& op, std::int64_t lo,
                                                                          std::int64_t hi, const CertBounds& bounds,
                                                                          unsigned jobs = 1);


/// Every n in [lo, hi] with no p, q in `base` such that outer(p, q) = n.
std::vector<std::int64_t> cover_scan(const std::vector<std::int64_t>& base, const OpSpec& outer, std::int64_t lo,
                                     std::int64_t hi, unsigned jobs = 1);

}  // namespace nt
