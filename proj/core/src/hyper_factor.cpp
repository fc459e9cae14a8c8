#include "nt/hyper_factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace nt {

namespace {

constexpr unsigned long kTrialLimit = 10'000'000;

BigInt pollard_brent(const BigInt& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, ys, q = 1, g = 1;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto step = [&](const BigInt& v) {
      BigInt t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          BigInt d = abs(x - y);
          q = q * d;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const BigInt& n, std::map<BigInt, std::uint64_t>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  BigInt d = pollard_brent(n);
  split(d, out);
  split(n / d, out);
}

}  // namespace

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

PrimeFactorization factor_usual(const BigInt& n) {
  if (n < 1) throw DomainError("factor_usual needs n >= 1");
  std::map<BigInt, std::uint64_t> found;
  BigInt m = n;
  auto strip = [&](unsigned long p) {
    std::uint64_t e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    if (e) found[BigInt(p)] += e;
  };
  strip(2);
  for (unsigned long p = 3; p <= kTrialLimit && m > 1; p += 2) {
    if (BigInt(p) * p > m) break;
    if ((p & 1023) == 1 && is_probable_prime(m)) break;
    strip(p);
  }
  split(m, found);
  return {found.begin(), found.end()};
}

bool is_exp_prime(const BigInt& q) {
  if (q < 1) throw DomainError("is_exp_prime needs q >= 1");
  if (q == 1) return true;
  std::uint64_t g = 0;
  for (const auto& [p, e] : factor_usual(q)) g = std::gcd(g, e);
  return g == 1;
}

bool is_exp_prime_bf(const BigInt& q, std::uint64_t bound) {
  if (q < 1) throw DomainError("is_exp_prime_bf needs q >= 1");
  for (BigInt u = 2; u * u <= q; ++u) {
    if (bound != 0 && u > bound) break;
    BigInt pw = u * u;
    while (pw < q) pw *= u;
    if (pw == q) return false;
  }
  return true;
}

HyperFactorization hyper_factorize(const BigInt& n, int level) {
  if (n < 2) throw DomainError("hyper_factorize needs n >= 2");
  HyperFactorization hf;
  hf.level = level;
  switch (level) {
    case 1:
      hf.degenerate = true;
      hf.terms.push_back({BigInt(1), n});
      return hf;
    case 2:
      for (const auto& [p, e] : factor_usual(n)) hf.terms.push_back({p, BigInt(static_cast<unsigned long>(e))});
      return hf;
    case 3: break;
    default: throw DomainError("hyper_factorize supports levels 1, 2, 3");
  }
  BigInt cur = n;
  while (cur > 1) {
    const auto fac = factor_usual(cur);
    std::uint64_t g = 0;
    for (const auto& [p, e] : fac) g = std::gcd(g, e);
    BigInt q = 1;
    for (const auto& [p, e] : fac) {
      BigInt pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e / g);
      q *= pe;
    }
    // g = q^beta * n1 with q not dividing n1
    BigInt rest(static_cast<unsigned long>(g));
    unsigned long beta = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), q.get_mpz_t())) {
      rest /= q;
      ++beta;
    }
    hf.terms.push_back({q, BigInt(beta + 1)});
    cur = rest;
  }
  return hf;
}

BigInt recompose(const HyperFactorization& hf, const EvalLimits& limits) {
  switch (hf.level) {
    case 1: {
      BigInt v = 0;
      for (const auto& t : hf.terms) v += t.b * t.q;
      return v;
    }
    case 2: {
      BigInt v = 1;
      for (const auto& t : hf.terms) v *= checked_pow(t.q, t.b, limits);
      return v;
    }
    case 3: {
      BigInt t = 1;
      for (auto it = hf.terms.rbegin(); it != hf.terms.rend(); ++it) {
        BigInt e = checked_pow(it->q, it->b - 1, limits) * t;
        t = checked_pow(it->q, e, limits);
      }
      return t;
    }
    default: throw DomainError("recompose supports levels 1, 2, 3");
  }
}

bool check_side_conditions(const HyperFactorization& hf, const EvalLimits& limits) {
  for (const auto& t : hf.terms) {
    if (t.b < 1) return false;
  }
  switch (hf.level) {
    case 1: return hf.degenerate && hf.terms.size() == 1 && hf.terms[0].q == 1;
    case 2:
      for (std::size_t k = 0; k < hf.terms.size(); ++k) {
        if (!is_probable_prime(hf.terms[k].q)) return false;
        if (k > 0 && hf.terms[k - 1].q >= hf.terms[k].q) return false;
      }
      return true;
    case 3: {
      BigInt inner = 1;
      for (auto it = hf.terms.rbegin(); it != hf.terms.rend(); ++it) {
        if (it->q < 2 || !is_exp_prime(it->q)) return false;
        if (mpz_divisible_p(inner.get_mpz_t(), it->q.get_mpz_t())) return false;
        BigInt e = checked_pow(it->q, it->b - 1, limits) * inner;
        inner = checked_pow(it->q, e, limits);
      }
      return true;
    }
    default: return false;
  }
}

namespace {

void enumerate_into(const BigInt& n, std::uint64_t bound, std::vector<HyperTerm>& prefix,
                    std::vector<HyperFactorization>& out) {
  for (std::uint64_t qv = 2; qv <= bound; ++qv) {
    const BigInt q(static_cast<unsigned long>(qv));
    if (q > n) break;
    auto e = exact_log(n, q);
    if (!e || *e < 1) continue;
    if (!is_exp_prime_bf(q)) continue;
    BigInt qpow = 1;  // q^(b-1)
    for (std::uint64_t b = 1; b <= bound; ++b) {
      if (!mpz_divisible_p(e->get_mpz_t(), qpow.get_mpz_t())) break;
      const BigInt t = *e / qpow;
      if (!mpz_divisible_p(t.get_mpz_t(), q.get_mpz_t())) {
        prefix.push_back({q, BigInt(static_cast<unsigned long>(b))});
        if (t == 1) {
          out.push_back({3, prefix, false});
        } else {
          enumerate_into(t, bound, prefix, out);
        }
        prefix.pop_back();
      }
      qpow *= q;
    }
  }
}

}  // namespace

std::vector<HyperFactorization> enumerate_hyper3_reps(const BigInt& n, std::uint64_t component_bound) {
  if (n < 2) throw DomainError("enumerate_hyper3_reps needs n >= 2");
  std::vector<HyperFactorization> out;
  std::vector<HyperTerm> prefix;
  enumerate_into(n, component_bound, prefix, out);
  return out;
}

}  // namespace nt
