#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nt {

using BigInt = mpz_class;

/// Raised when an intermediate value would exceed the configured bit budget.
class TooLarge : public std::runtime_error {
 public:
  explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

/// Raised for arguments outside an operation's mathematical domain
/// (negative exponents, s <= 1 for series, non-prime moduli, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

struct EvalLimits {
  std::uint64_t max_bits = 1u << 20;  // 1 Mbit
  std::uint64_t max_operand_count = 1u << 16;
};

inline std::uint64_t bit_length(const BigInt& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

inline bool fits_int64(const BigInt& v) { return mpz_fits_slong_p(v.get_mpz_t()) != 0; }

inline std::int64_t to_int64(const BigInt& v) { return mpz_get_si(v.get_mpz_t()); }

inline BigInt from_int64(std::int64_t v) {
  BigInt r;
  mpz_set_si(r.get_mpz_t(), v);
  return r;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

/// Parses an optionally signed decimal integer; nullopt on malformed text.
std::optional<BigInt> parse_bigint(std::string_view text);

/// base^exp with 0^0 = 1. Throws DomainError for negative exponents and
/// TooLarge when the result would need more than limits.max_bits bits.
BigInt checked_pow(const BigInt& base, const BigInt& exp, const EvalLimits& limits = {});

/// Exact integer k-th root, nullopt when v is not a perfect k-th power
/// (or negative with even k).
std::optional<BigInt> exact_root(const BigInt& v, unsigned long k);

/// Exact logarithm: e with base^e == v, nullopt when no such e >= 0 exists.
std::optional<BigInt> exact_log(const BigInt& v, const BigInt& base);

BigInt gcd(const BigInt& a, const BigInt& b);

/// Checked 64-bit helpers; return false on overflow.
inline bool add_overflow(std::int64_t a, std::int64_t b, std::int64_t& out) {
  return __builtin_add_overflow(a, b, &out);
}
inline bool sub_overflow(std::int64_t a, std::int64_t b, std::int64_t& out) {
  return __builtin_sub_overflow(a, b, &out);
}
inline bool mul_overflow(std::int64_t a, std::int64_t b, std::int64_t& out) {
  return __builtin_mul_overflow(a, b, &out);
}

/// a^e for e >= 0 in 64 bits; returns false on overflow. 0^0 = 1.
bool pow_overflow(std::int64_t a, std::int64_t e, std::int64_t& out);

}  // namespace nt
