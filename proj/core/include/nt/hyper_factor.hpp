#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nt/bigint.hpp"

namespace nt {

/// (prime, exponent) pairs, strictly increasing in the prime.
using PrimeFactorization = std::vector<std::pair<BigInt, std::uint64_t>>;

/// Trial division up to 10^7 (stopping at the square root), then
/// Miller-Rabin and Pollard-Brent splitting. 1 maps to the empty sequence.
PrimeFactorization factor_usual(const BigInt& n);

bool is_probable_prime(const BigInt& n);

/// gcd of the prime exponents equals 1; 1 itself is exponential-prime.
bool is_exp_prime(const BigInt& q);

/// Direct search for q = u^v with 2 <= u <= min(sqrt q, bound), v >= 2.
/// bound = 0 means no cap beyond sqrt q.
bool is_exp_prime_bf(const BigInt& q, std::uint64_t bound = 0);

struct HyperTerm {
  BigInt q;
  BigInt b;
  bool operator==(const HyperTerm&) const = default;
};

/// Terms are stored outermost first. Level 3: n = q1^(q1^(b1-1) * t2) where
/// t2 is the value of the remaining terms (1 when none). Level 2: product of
/// q^b. Level 1: the single degenerate term (1, n) meaning n = 0 + n*1.
struct HyperFactorization {
  int level = 3;
  std::vector<HyperTerm> terms;
  bool degenerate = false;
  bool operator==(const HyperFactorization&) const = default;
};

HyperFactorization hyper_factorize(const BigInt& n, int level);

BigInt recompose(const HyperFactorization& hf, const EvalLimits& limits = {});

/// Every q is prime for its level (exponential prime for level 3), every
/// b >= 1, and each q does not divide the value of the terms inside it.
bool check_side_conditions(const HyperFactorization& hf, const EvalLimits& limits = {});

/// All level-3 representations of n with q, b <= component_bound, found by
/// search independently of hyper_factorize.
std::vector<HyperFactorization> enumerate_hyper3_reps(const BigInt& n, std::uint64_t component_bound);

}  // namespace nt
