#include "nt/modarith.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "nt/hyper_factor.hpp"
#include "nt/parallel.hpp"

namespace nt {

namespace {

std::optional<BigInt> apply2(Evaluator& ev, const BigInt& a, const BigInt& b) {
  const BigInt args[2] = {a, b};
  return ev.eval_big(args);
}

OpSpec kxy_op(const BigInt& k) { return parse_op_expr("k*x*y", 2, {{"k", k}}, DomainSpec::integers()); }

OpSpec linear_op(const BigInt& u, const BigInt& v) {
  return parse_op_expr("u*x+v*y", 2, {{"u", u}, {"v", v}}, DomainSpec::integers());
}

const OpSpec& mul_z() {
  static const OpSpec op = parse_op_expr("x*y", 2, {}, DomainSpec::integers());
  return op;
}

std::vector<std::uint64_t> primes_below(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p < n; ++p) {
    if (is_probable_prime(BigInt(static_cast<unsigned long>(p)))) out.push_back(p);
  }
  return out;
}

struct Solve {
  bool decided = false;  // exact verdict for this position
  std::optional<BigInt> alpha;
};

// alpha with f(alpha, m) = d (pos 0) or f(m, alpha) = d (pos 1).
Solve solve_position(const OpSpec& f, const OpTraits& traits, Evaluator& ev, const BigInt& m, const BigInt& d,
                     int pos, const CertBounds& bounds) {
  auto at = [&](const BigInt& a) { return pos == 0 ? apply2(ev, a, m) : apply2(ev, m, a); };
  Solve out;
  if (traits.degree[static_cast<std::size_t>(pos)] == 0 || traits.degree[static_cast<std::size_t>(pos)] == 1) {
    auto raw = [&](long a) {
      BigInt args[2] = {m, m};
      args[pos] = a;
      return eval_raw(f, args);
    };
    auto r0 = raw(0), r1 = raw(1);
    if (r0 && r1) {
      out.decided = true;
      const BigInt beta = *r1 - *r0;
      if (beta == 0) {
        if (*r0 != d) return out;
        for (auto a : f.domain.elements_in(-bounds.radius, bounds.radius)) {
          auto v = at(from_int64(a));
          if (v && *v == d) {
            out.alpha = from_int64(a);
            return out;
          }
        }
        out.decided = false;
        return out;
      }
      const BigInt num = d - *r0;
      if (num % beta != 0) return out;
      const BigInt a = num / beta;
      if (!f.domain.contains(a)) return out;
      auto v = at(a);
      if (v && *v == d) out.alpha = a;
      return out;
    }
  }
  for (auto a : f.domain.elements_in(-bounds.radius, bounds.radius)) {
    auto v = at(from_int64(a));
    if (v && *v == d) {
      out.alpha = from_int64(a);
      out.decided = true;
      return out;
    }
  }
  out.decided = f.domain.finite();
  return out;
}

}  // namespace

InversePair addition_pair() {
  return {parse_op_expr("x+y", 2, {}, DomainSpec::integers()), parse_op_expr("x-y", 2, {}, DomainSpec::integers()),
          InverseSide::Right};
}

InverseCheck inverse_check(const InversePair& pair, std::int64_t sample_bound) {
  if (pair.g.arity != 2 || pair.g_inv.arity != 2) throw DomainError("inverse pairs need binary ops");
  Evaluator g(pair.g), gi(pair.g_inv);
  InverseCheck out;
  const auto samples = pair.g.domain.elements_in(-sample_bound, sample_bound);
  const bool whole = pair.g.domain.finite() &&
                     samples.size() == pair.g.domain.elements_in(*pair.g.domain.min(), *pair.g.domain.max()).size();
  out.holds = {true, whole};
  for (auto a : samples) {
    for (auto b : samples) {
      const BigInt A = from_int64(a), B = from_int64(b);
      std::optional<BigInt> back;
      if (pair.side == InverseSide::Right) {
        auto ab = apply2(g, A, B);
        if (ab) back = apply2(gi, *ab, B);
      } else {
        auto ba = apply2(g, B, A);
        if (ba) back = apply2(gi, B, *ba);
      }
      if (!back) continue;
      ++out.checked;
      if (*back != A) {
        out.holds = {false, true};
        out.counterexample = {a, b};
        return out;
      }
    }
  }
  return out;
}

CongruenceResult congruent(const CongruenceQuery& q, const CertBounds& bounds) {
  if (q.f.arity != 2) throw DomainError("congruence needs a binary f");
  CongruenceResult out;
  Evaluator gi(q.pair.g_inv);
  out.d = q.pair.side == InverseSide::Right ? apply2(gi, q.c, q.b) : apply2(gi, q.b, q.c);
  if (!out.d) {
    out.holds = {false, true};
    out.diagnostic = "c g_inv b is undefined";
    return out;
  }
  const BigInt& d = *out.d;
  const auto traits = analyze(q.f);
  Evaluator ev(q.f);
  bool proven = true;
  for (int pos = 0; pos < 2; ++pos) {
    auto s = solve_position(q.f, traits, ev, q.m, d, pos, bounds);
    if (s.alpha) {
      out.holds = {true, true};
      out.alpha = s.alpha;
      out.alpha_right = pos == 1;
      return out;
    }
    proven = proven && s.decided;
  }
  if (q.semantics.kind == Semantics::Kind::Deep && q.semantics.depth > 1) {
    // Values reachable from m through nested applications with box cofactors.
    if (!fits_int64(q.m) || !fits_int64(d)) {
      out.holds = {false, false};
      out.diagnostic = "deep search needs 64-bit m and d";
      return out;
    }
    const auto box = q.f.domain.elements_in(-bounds.radius, bounds.radius);
    const BigInt cap = std::max<BigInt>(abs(d), BigInt(static_cast<long>(bounds.radius)));
    std::set<std::int64_t> seen{to_int64(q.m)};
    std::vector<std::int64_t> frontier{to_int64(q.m)};
    constexpr std::size_t kMaxReach = 1'000'000;
    for (int depth = 1; depth <= q.semantics.depth && !frontier.empty(); ++depth) {
      std::vector<std::int64_t> next;
      for (auto t : frontier) {
        for (auto a : box) {
          for (int pos = 0; pos < 2; ++pos) {
            auto v = pos == 0 ? apply2(ev, from_int64(a), from_int64(t)) : apply2(ev, from_int64(t), from_int64(a));
            if (!v || abs(*v) > cap) continue;
            if (*v == d) {
              out.holds = {true, true};
              out.diagnostic = "reached at depth " + std::to_string(depth);
              return out;
            }
            if (seen.insert(to_int64(*v)).second) next.push_back(to_int64(*v));
          }
        }
      }
      if (seen.size() > kMaxReach) break;
      frontier = std::move(next);
    }
    proven = false;
  }
  out.holds = {false, proven};
  return out;
}

BigInt power_fold(const OpSpec& op, const BigInt& a, std::uint64_t p, const EvalLimits& limits) {
  if (op.arity != 2) throw DomainError("power fold needs a binary op");
  if (p == 0) throw DomainError("power fold needs p >= 1");
  Evaluator ev(op, limits);
  BigInt acc = a;
  for (std::uint64_t i = 1; i < p; ++i) {
    auto v = apply2(ev, a, acc);
    if (!v) throw DomainError("power fold leaves the op's domain");
    acc = std::move(*v);
  }
  return acc;
}

BigInt kxy_fold_closed(const BigInt& k, const BigInt& a, std::uint64_t p) {
  BigInt kp, ap;
  mpz_pow_ui(kp.get_mpz_t(), k.get_mpz_t(), p - 1);
  mpz_pow_ui(ap.get_mpz_t(), a.get_mpz_t(), p);
  return kp * ap;
}

BigInt linear_fold_closed(const BigInt& u, const BigInt& v, const BigInt& k, std::uint64_t p) {
  if (v == 1) throw DomainError("closed form needs v != 1");
  BigInt vp;
  mpz_pow_ui(vp.get_mpz_t(), v.get_mpz_t(), p - 1);
  BigInt geo = vp - 1;
  mpz_divexact(geo.get_mpz_t(), geo.get_mpz_t(), BigInt(v - 1).get_mpz_t());
  return k * (u * geo + vp);
}

FermatReport fermat_kxy_check(const BigInt& k, const BigInt& a, std::uint64_t p, const EvalLimits& limits) {
  const BigInt P(static_cast<unsigned long>(p));
  if (!is_probable_prime(P)) throw DomainError("p must be prime");
  if (gcd(k, P) != 1) throw DomainError("gcd(k, p) must be 1");
  const OpSpec f = kxy_op(k);
  FermatReport r;
  r.fold = power_fold(f, a, p, limits);
  Evaluator ev(f, limits);
  auto c = apply2(ev, r.fold, 1);
  auto b = apply2(ev, a, 1);
  CongruenceQuery q{*c, *b, P, addition_pair(), f, Semantics::top()};
  r.congruence = congruent(q, CertBounds{}).holds.value;
  const BigInt closed = kxy_fold_closed(k, a, p);
  r.closed_form = closed == r.fold;
  const BigInt diff = k * closed - k * a;
  r.divisible = diff % (k * P) == 0;
  return r;
}

FermatReport fermat_linear_check(const BigInt& u, const BigInt& v, const BigInt& h, const BigInt& k, std::uint64_t p,
                                 const EvalLimits& limits) {
  const BigInt P(static_cast<unsigned long>(p));
  if (u != h * (v - 1)) throw DomainError("u must equal h(v-1)");
  if (gcd(P, v) != 1) throw DomainError("gcd(p, v) must be 1");
  if (!is_probable_prime(P)) throw DomainError("p must be prime");
  FermatReport r;
  r.fold = power_fold(linear_op(u, v), k, p, limits);
  CongruenceQuery q{r.fold, k, P, addition_pair(), mul_z(), Semantics::top()};
  r.congruence = congruent(q, CertBounds{}).holds.value;
  if (v == 1) {
    r.closed_form = r.fold == k;
    r.divisible = true;
  } else {
    const BigInt closed = linear_fold_closed(u, v, k, p);
    r.closed_form = closed == r.fold;
    r.divisible = (closed - k) % P == 0;
  }
  return r;
}

namespace {

template <typename PerPrime>
GridReport run_grid(const std::vector<std::uint64_t>& primes, unsigned jobs, PerPrime&& per_prime) {
  std::vector<GridReport> parts(primes.size());
  parallel_for(primes.size(), jobs, [&](std::size_t i) { per_prime(primes[i], parts[i]); });
  GridReport out;
  for (auto& g : parts) {
    out.cases += g.cases;
    out.failures += g.failures;
    for (auto& c : g.counterexamples) {
      if (out.counterexamples.size() < 16) out.counterexamples.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace

GridReport fermat_kxy_grid(std::int64_t kmax, std::int64_t amax, std::uint64_t pmax, unsigned jobs) {
  return run_grid(primes_below(pmax), jobs, [&](std::uint64_t p, GridReport& g) {
    for (std::int64_t k = 1; k <= kmax; ++k) {
      if (static_cast<std::uint64_t>(k) % p == 0) continue;
      for (std::int64_t a = 1; a <= amax; ++a) {
        ++g.cases;
        if (!fermat_kxy_check(k, a, p).ok()) {
          ++g.failures;
          g.counterexamples.push_back("k=" + std::to_string(k) + ",a=" + std::to_string(a) + ",p=" + std::to_string(p));
        }
      }
    }
  });
}

GridReport fermat_linear_grid(std::int64_t hlo, std::int64_t hhi, std::int64_t vlo, std::int64_t vhi,
                              std::int64_t kmax, std::uint64_t pmax, unsigned jobs) {
  return run_grid(primes_below(pmax), jobs, [&](std::uint64_t p, GridReport& g) {
    for (std::int64_t h = hlo; h <= hhi; ++h) {
      for (std::int64_t v = vlo; v <= vhi; ++v) {
        if (std::gcd(static_cast<std::uint64_t>(std::abs(v)), p) != 1) continue;
        for (std::int64_t k = 1; k <= kmax; ++k) {
          ++g.cases;
          const BigInt V = from_int64(v);
          if (!fermat_linear_check(from_int64(h) * (V - 1), V, from_int64(h), from_int64(k), p).ok()) {
            ++g.failures;
            g.counterexamples.push_back("h=" + std::to_string(h) + ",v=" + std::to_string(v) +
                                        ",k=" + std::to_string(k) + ",p=" + std::to_string(p));
          }
        }
      }
    }
  });
}

}  // namespace nt
