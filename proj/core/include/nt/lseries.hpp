#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "nt/genprime.hpp"

namespace nt {

/// A prime combination: a leaf (prime or unit) or f(left, right).
struct CombElement {
  std::int64_t value = 0;
  std::shared_ptr<const CombElement> left;
  std::shared_ptr<const CombElement> right;

  bool is_leaf() const { return left == nullptr; }
  std::size_t size() const;  // number of leaf occurrences
  std::string to_string() const;
};

using CombPtr = std::shared_ptr<const CombElement>;

CombPtr comb_leaf(std::int64_t v);
CombPtr comb_apply(std::int64_t value, CombPtr left, CombPtr right);

/// Primes and units of the op in [domain min, value_cutoff].
std::vector<std::int64_t> comb_leaves(const OpSpec& op, std::int64_t value_cutoff, const CertBounds& bounds,
                                      unsigned jobs = 1);

/// Every combination of at most size_cutoff leaf occurrences with value in
/// [1, value_cutoff], ordered by size. Units only appear as bare leaves.
/// Distinct trees are kept even when their values coincide.
std::vector<CombPtr> gen_F(const OpSpec& op, const std::vector<std::int64_t>& leaves, std::int64_t value_cutoff,
                           std::size_t size_cutoff, const CertBounds& bounds);

/// One left-nested representative per sorted multiset of non-unit leaves,
/// plus the bare units. Throws DomainError when the op fails the
/// associativity/commutativity probe.
std::vector<CombPtr> gen_TAC(const OpSpec& op, const std::vector<std::int64_t>& leaves, std::int64_t value_cutoff,
                             std::size_t size_cutoff, const CertBounds& bounds);

struct CoeffTable {
  std::int64_t cutoff = 0;
  std::vector<std::uint64_t> counts;  // counts[i] = c_i for 1 <= i <= cutoff
  std::string source;                 // "F", "TAC" or "explicit"

  std::uint64_t at(std::int64_t i) const {
    return i >= 1 && i <= cutoff ? counts[static_cast<std::size_t>(i)] : 0;
  }
};

CoeffTable coeff_table(const std::vector<CombPtr>& elements, std::int64_t cutoff, std::string source = "explicit");

struct SeriesPoint {
  std::string s;
  std::int64_t n = 0;
  bool exact = false;
  mpq_class value;      // exact only
  std::string decimal;  // 50 significant digits
  double zeta_tail_bound = 0.0;  // N^(1-s)/(s-1)
};

/// sum c_i / i^s over i <= N. `s` is an integer, a fraction p/q or a
/// decimal, and must exceed 1. Exact rational arithmetic for integer s,
/// 50-digit floating point otherwise.
SeriesPoint lseries_partial(const CoeffTable& table, std::string_view s, std::int64_t n);
SeriesPoint zeta_partial(std::string_view s, std::int64_t n);
/// sum (c_i - 1) / i^s over i <= N.
SeriesPoint defect_partial(const CoeffTable& table, std::string_view s, std::int64_t n);

struct ACProbe {
  Certified<bool> commutative;
  Certified<bool> associative;
  std::vector<std::int64_t> commutative_counterexample;  // (a, b)
  std::vector<std::int64_t> associative_counterexample;  // (a, b, c)
};

/// Exhaustive over domain ∩ [-sample_bound, sample_bound].
ACProbe assoc_comm_probe(const OpSpec& op, std::int64_t sample_bound);

}  // namespace nt
