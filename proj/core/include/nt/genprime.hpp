#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nt/op_expr.hpp"

namespace nt {

/// Finite stand-ins for the unbounded quantifiers: the "for all k" of unit
/// and zero tests ranges over target span ∩ domain, witnesses are searched
/// in domain ∩ [-radius, radius].
struct CertBounds {
  std::int64_t span_lo = -32;
  std::int64_t span_hi = 32;
  std::int64_t radius = 256;
  int depth = 1;

  bool operator==(const CertBounds&) const = default;
  std::string to_string() const;
};

/// span [-32,32] ∩ domain (the whole domain when finite); radius 256, or
/// max(256, max |window|) for ops nondecreasing over N0/N1.
CertBounds default_bounds(const OpSpec& op, std::int64_t window_lo, std::int64_t window_hi);

/// proven: decided exactly (affine or monotone argument, or exhaustive over a
/// finite domain). Otherwise the value holds within the bounds in use.
template <typename V>
struct Certified {
  V value{};
  bool proven = false;
  bool operator==(const Certified&) const = default;
};

struct Semantics {
  enum class Kind { TopLevel, Deep };
  Kind kind = Kind::TopLevel;
  int depth = 1;

  static Semantics top() { return {}; }
  static Semantics deep(int d) { return {Kind::Deep, d}; }
  /// `top` or `deep:<d>`.
  static Semantics parse(std::string_view text);
  std::string to_string() const;
  bool operator==(const Semantics&) const = default;
};

/// Representation tree: a leaf value or value = f(args...).
struct Witness {
  std::int64_t value = 0;
  std::vector<Witness> args;

  bool is_leaf() const { return args.empty(); }
  /// `f(8,4)`, nested as `f(19,f(2,2))`.
  std::string to_string() const;
};

enum class Verdict { Unit, Composite, Prime, Unknown };
std::string_view to_string(Verdict v);

struct Classification {
  std::int64_t n = 0;
  Verdict verdict = Verdict::Unknown;
  std::uint32_t unit_mask = 0;         // bit j: unit at argument position j
  std::uint32_t unit_proven_mask = 0;  // bit j: position-j test decided exactly
  bool proven = false;                 // verdict decided exactly
  std::optional<Witness> witness;      // Composite only

  bool unit_at(int j) const { return (unit_mask >> j) & 1u; }
  bool left_unit() const { return unit_at(0); }
  bool right_unit() const { return unit_at(1); }
};

/// Memoized, thread-safe unit tests for one op and bounds.
class UnitOracle {
 public:
  UnitOracle(const OpSpec& op, CertBounds bounds, EvalLimits limits = {});

  Certified<bool> test(int position, std::int64_t u) const;
  Certified<bool> test(Evaluator& ev, int position, std::int64_t u) const;
  bool is_unit(int position, std::int64_t u) const { return test(position, u).value; }

  const OpSpec& op() const { return op_; }
  const OpTraits& traits() const { return traits_; }
  const CertBounds& bounds() const { return bounds_; }
  const EvalLimits& limits() const { return limits_; }

 private:
  OpSpec op_;
  OpTraits traits_;
  CertBounds bounds_;
  EvalLimits limits_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::int64_t, Certified<bool>> cache_;  // key: u * 64 + position
};

/// Unit test for argument position `position` (0-based): for all k in the
/// span there are other arguments with f(..., u, ...) = k.
Certified<bool> is_nary_unit(const OpSpec& op, std::int64_t u, int position, const CertBounds& bounds);
inline Certified<bool> is_left_unit(const OpSpec& op, std::int64_t u, const CertBounds& bounds) {
  return is_nary_unit(op, u, 0, bounds);
}
inline Certified<bool> is_right_unit(const OpSpec& op, std::int64_t u, const CertBounds& bounds) {
  return is_nary_unit(op, u, 1, bounds);
}

/// An argument b with f(u, b) = k (u at `position`, binary ops). Exact for
/// affine sections, otherwise searched nearest-to-zero first. nullopt when
/// nothing is found within the radius.
std::optional<std::int64_t> unit_witness(const OpSpec& op, std::int64_t u, std::int64_t k, const CertBounds& bounds,
                                         int position = 0);

/// f(z, k) = z (left) or f(k, z) = z (right) for every k in the span.
Certified<bool> is_left_zero(const OpSpec& op, std::int64_t z, const CertBounds& bounds);
Certified<bool> is_right_zero(const OpSpec& op, std::int64_t z, const CertBounds& bounds);

/// Arguments within the radius, none a unit at its position, with f(args) = m.
std::optional<Witness> find_composite_witness(const OpSpec& op, std::int64_t m, const CertBounds& bounds);

/// Whether f(args) is defined and every argument fails its positional unit test.
bool qualifies(const OpSpec& op, std::span<const std::int64_t> args, const CertBounds& bounds);

/// Checks a composite witness: it evaluates to m, and under TopLevel its root
/// application qualifies; under Deep some application in it qualifies.
bool verify_witness(const OpSpec& op, const Witness& w, std::int64_t m, const CertBounds& bounds,
                    Semantics semantics);

Classification classify(const OpSpec& op, std::int64_t m, const CertBounds& bounds,
                        Semantics semantics = Semantics::top(), EvalLimits limits = {});

struct SieveTable {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  OpSpec op;
  CertBounds bounds;
  Semantics semantics;
  std::vector<Classification> entries;  // domain elements of [lo, hi], ascending
  std::vector<std::string> notes;

  const Classification* find(std::int64_t n) const;
  std::vector<std::int64_t> with(Verdict v) const;
};

/// Values in [lo, hi] reached as f(args) with every argument a non-unit at
/// its position and within the radius, each with the lexicographically first
/// such arguments. `tainted` is set when an evaluation hit the bit budget
/// and monotonicity could not rule it out.
std::map<std::int64_t, std::vector<std::int64_t>> qualifying_image(const UnitOracle& oracle, std::int64_t lo,
                                                                   std::int64_t hi, unsigned jobs = 1,
                                                                   bool* tainted = nullptr);

SieveTable sieve(const OpSpec& op, std::int64_t lo, std::int64_t hi, const CertBounds& bounds,
                 Semantics semantics = Semantics::top(), unsigned jobs = 1, EvalLimits limits = {});

/// The Prime entries of a sieve as an explicit domain.
DomainSpec prime_set(const OpSpec& op, std::int64_t lo, std::int64_t hi, const CertBounds& bounds, unsigned jobs = 1);

}  // namespace nt
