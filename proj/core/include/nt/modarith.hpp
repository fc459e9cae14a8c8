#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nt/genprime.hpp"

namespace nt {

enum class InverseSide { Right, Left };

/// right: (a g b) g_inv b == a.  left: b g_inv (b g a) == a.
struct InversePair {
  OpSpec g;
  OpSpec g_inv;
  InverseSide side = InverseSide::Right;
};

struct InverseCheck {
  Certified<bool> holds;
  std::size_t checked = 0;  // samples where both sides were defined
  std::vector<std::int64_t> counterexample;  // (a, b)
};

/// Exhaustive over g's domain elements in [-sample_bound, sample_bound];
/// samples where either application is undefined are skipped.
InverseCheck inverse_check(const InversePair& pair, std::int64_t sample_bound);

/// c ≡_g b (mod_f m).
struct CongruenceQuery {
  BigInt c, b, m;
  InversePair pair;
  OpSpec f;
  Semantics semantics = Semantics::top();
};

struct CongruenceResult {
  Certified<bool> holds;
  std::optional<BigInt> d;      // c g_inv b
  std::optional<BigInt> alpha;  // f(alpha, m) == d, or f(m, alpha) == d when alpha_right
  bool alpha_right = false;
  std::string diagnostic;
};

/// True iff m is an f-factor of d = c g_inv b. TopLevel solves
/// f(alpha, m) = d or f(m, alpha) = d exactly when f is affine in alpha and
/// searches the bounds box otherwise. Deep(k) also accepts d reachable from
/// m through at most k applications with box cofactors.
CongruenceResult congruent(const CongruenceQuery& q, const CertBounds& bounds);

/// Right-nested fold a o (a o (... o a)) with p occurrences of a.
BigInt power_fold(const OpSpec& op, const BigInt& a, std::uint64_t p, const EvalLimits& limits = {});

struct FermatReport {
  bool congruence = false;    // engine fold pushed through congruent()
  bool closed_form = false;   // fold equals the closed form
  bool divisible = false;     // closed-form difference divisible as claimed
  BigInt fold;
  bool ok() const { return congruence && closed_form && divisible; }
};

/// Op k*x*y over Z. Throws DomainError unless p is prime and gcd(k, p) = 1.
FermatReport fermat_kxy_check(const BigInt& k, const BigInt& a, std::uint64_t p, const EvalLimits& limits = {});

/// Op u*x+v*y over Z, folded at k. Throws DomainError unless u = h(v-1),
/// gcd(p, v) = 1 and p is prime.
FermatReport fermat_linear_check(const BigInt& u, const BigInt& v, const BigInt& h, const BigInt& k, std::uint64_t p,
                                 const EvalLimits& limits = {});

/// Closed forms used by the checks.
BigInt kxy_fold_closed(const BigInt& k, const BigInt& a, std::uint64_t p);
BigInt linear_fold_closed(const BigInt& u, const BigInt& v, const BigInt& k, std::uint64_t p);

struct GridReport {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;  // first few, "k=..,a=..,p=.."
};

/// k, a in [1, kmax] x [1, amax], primes p < pmax with gcd(k, p) = 1.
GridReport fermat_kxy_grid(std::int64_t kmax, std::int64_t amax, std::uint64_t pmax, unsigned jobs = 1);
/// h in [hlo, hhi], v in [vlo, vhi], k in [1, kmax], primes p < pmax with gcd(p, v) = 1.
GridReport fermat_linear_grid(std::int64_t hlo, std::int64_t hhi, std::int64_t vlo, std::int64_t vhi,
                              std::int64_t kmax, std::uint64_t pmax, unsigned jobs = 1);

/// Canonical pairs.
InversePair addition_pair();  // x+y, x-y, right

}  // namespace nt
