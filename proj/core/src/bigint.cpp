#include "nt/bigint.hpp"

#include <cctype>

namespace nt {

std::optional<BigInt> parse_bigint(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i == text.size()) return std::nullopt;
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) return std::nullopt;
  }
  BigInt r;
  std::string s(text.substr(text[0] == '+' ? 1 : 0));
  if (r.set_str(s, 10) != 0) return std::nullopt;
  return r;
}

BigInt checked_pow(const BigInt& base, const BigInt& exp, const EvalLimits& limits) {
  if (exp < 0) throw DomainError("negative exponent " + exp.get_str());
  if (exp == 0) return 1;
  if (base == 0 || base == 1) return base;
  if (base == -1) return (mpz_odd_p(exp.get_mpz_t()) != 0) ? BigInt(-1) : BigInt(1);
  // |base| >= 2, so the result has at least exp * (bits(base) - 1) + 1 bits.
  if (!mpz_fits_ulong_p(exp.get_mpz_t()) || exp > limits.max_bits) {
    throw TooLarge("power exponent " + exp.get_str() + " exceeds bit budget");
  }
  const unsigned long e = exp.get_ui();
  const std::uint64_t base_bits = bit_length(base);
  const std::uint64_t lower = static_cast<std::uint64_t>(e) * (base_bits - 1) + 1;
  if (lower > limits.max_bits) {
    throw TooLarge("power result exceeds " + std::to_string(limits.max_bits) + " bits");
  }
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  if (bit_length(r) > limits.max_bits) {
    throw TooLarge("power result exceeds " + std::to_string(limits.max_bits) + " bits");
  }
  return r;
}

std::optional<BigInt> exact_root(const BigInt& v, unsigned long k) {
  if (k == 0) return std::nullopt;
  if (k == 1) return v;
  if (v < 0 && k % 2 == 0) return std::nullopt;
  BigInt r;
  if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

std::optional<BigInt> exact_log(const BigInt& v, const BigInt& base) {
  if (v == 1) return BigInt(0);
  if (base == v) return BigInt(1);
  if (base < 2 || v < base) return std::nullopt;
  BigInt acc = base;
  BigInt e = 1;
  while (acc < v) {
    acc *= base;
    ++e;
  }
  if (acc == v) return e;
  return std::nullopt;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool pow_overflow(std::int64_t a, std::int64_t e, std::int64_t& out) {
  std::int64_t result = 1;
  std::int64_t base = a;
  while (e > 0) {
    if (e & 1) {
      if (mul_overflow(result, base, result)) return true;
    }
    e >>= 1;
    if (e > 0 && mul_overflow(base, base, base)) return true;
  }
  out = result;
  return false;
}

}  // namespace nt
