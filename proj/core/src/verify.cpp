#include "nt/verify.hpp"

#include <atomic>
#include <chrono>
#include <sstream>

#include "nt/dioph.hpp"
#include "nt/hyper_engine.hpp"
#include "nt/hyper_factor.hpp"
#include "nt/lseries.hpp"
#include "nt/modarith.hpp"
#include "nt/parallel.hpp"

namespace nt {

Profile parse_profile(std::string_view text) {
  if (text == "quick") return Profile::Quick;
  if (text == "full") return Profile::Full;
  throw DomainError("profile must be quick or full");
}

std::string_view to_string(Profile p) { return p == Profile::Quick ? "quick" : "full"; }

namespace {

std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

HyperFormula build(std::uint64_t& state, int leaves) {
  state = mix(state);
  if (leaves == 1) return HyperFormula::leaf(std::string(1, "xyz"[state % 3]));
  const int left = 1 + static_cast<int>(state % static_cast<std::uint64_t>(leaves - 1));
  const int level = static_cast<int>((state >> 8) % 4);
  auto l = build(state, left);
  auto r = build(state, leaves - left);
  return HyperFormula::apply(level, std::move(l), std::move(r));
}

using Check = std::function<bool(std::ostringstream&)>;

struct Spec {
  int id;
  const char* name;
  double limit;
  Check run;
};

template <typename T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

bool same_terms(const HyperFactorization& a, const HyperFactorization& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    if (a.terms[i].q != b.terms[i].q || a.terms[i].b != b.terms[i].b) return false;
  }
  return true;
}

}  // namespace

HyperFormula sample_formula(std::uint64_t index, int max_leaves) {
  std::uint64_t state = mix(index + 1);
  const int leaves = 1 + static_cast<int>(state % static_cast<std::uint64_t>(max_leaves));
  return build(state, leaves);
}

std::vector<CriterionResult> verify_all(Profile profile, unsigned jobs, bool tamper,
                                        const std::function<void(const CriterionResult&)>& on_result) {
  const bool full = profile == Profile::Full;
  const auto n1 = DomainSpec::naturals();
  std::vector<Spec> specs;

  specs.push_back({1, "x^y sieve on [1,28]", 1.0, [&](std::ostringstream& os) {
    const auto op = parse_op_expr("x^y", 2, {}, n1);
    const auto t = sieve(op, 1, 28, default_bounds(op, 1, 28), Semantics::top(), jobs);
    const std::vector<std::int64_t> expect{2, 3, 5, 6, 7, 10, 11, 12, 13, 14, 15, 17, 18, 19, 20, 21, 22, 23, 24, 26, 28};
    const auto got = t.with(Verdict::Prime);
    const auto* one = t.find(1);
    const bool one_unit = one && one->verdict == Verdict::Unit && one->right_unit();
    bool noted = false;
    for (const auto& n : t.notes) noted = noted || n.rfind("1 is a right-unit", 0) == 0;
    os << "primes=" << join(got) << "; 1 right-unit=" << one_unit << "; noted=" << noted;
    return got == expect && one_unit && noted;
  }});

  specs.push_back({2, "x^2+y^2 prime set on [1,27]", 1.0, [&](std::ostringstream& os) {
    const auto op = parse_op_expr("x^2+y^2", 2, {}, n1);
    const auto set = prime_set(op, 1, 27, default_bounds(op, 1, 27), jobs);
    const std::vector<std::int64_t> expect{1, 3, 4, 6, 7, 9, 11, 12, 14, 15, 16, 19, 21, 22, 23, 24, 27};
    const auto got = set.explicit_elements();
    os << "primes=" << join(got);
    return got == expect;
  }});

  specs.push_back({3, "higher distributivity", 10.0, [&](std::ostringstream& os) {
    std::size_t cases = 0, bad = 0;
    for (int i = 1; i <= 2; ++i) {
      for (int n = 1; n <= 6; ++n) {
        for (int x = 1; x <= 6; ++x) {
          for (int y = 1; y <= 6; ++y) {
            ++cases;
            if (!distrib_check(i, n, x, y).equal) ++bad;
          }
        }
      }
    }
    for (int n = 1; n <= 3; ++n) {
      for (int x = 1; x <= 2; ++x) {
        for (int y = 1; y <= 2; ++y) {
          ++cases;
          if (!distrib_check(3, n, x, y).equal) ++bad;
        }
      }
    }
    const auto w = distrib_check(3, 3, 2, 2);
    const BigInt two512 = BigInt(1) << 512;
    const bool worked = w.equal && w.lhs == two512 && w.rhs == two512;
    os << cases << " cases, " << bad << " unequal; worked example 2^512=" << worked;
    return bad == 0 && worked;
  }});

  specs.push_back({4, "zero tower parity", 1.0, [&](std::ostringstream& os) {
    std::vector<int> got;
    bool ok = true;
    for (std::uint64_t n = 1; n <= 20; ++n) {
      got.push_back(zero_tower(n));
      ok = ok && got.back() == (n % 2 == 0 ? 1 : 0);
    }
    os << "n=1..20: " << join(got);
    return ok;
  }});

  const std::int64_t c5 = full ? 100000 : 10000;
  specs.push_back({5, "hyper3 factorization round trip", 60.0, [&](std::ostringstream& os) {
    std::atomic<std::size_t> bad{0};
    constexpr std::int64_t kChunk = 1024;
    const auto chunks = static_cast<std::size_t>((c5 - 2) / kChunk + 1);
    parallel_for(chunks, jobs, [&](std::size_t c) {
      const std::int64_t lo = 2 + static_cast<std::int64_t>(c) * kChunk;
      for (std::int64_t n = lo; n < std::min(c5 + 1, lo + kChunk); ++n) {
        const auto hf = hyper_factorize(n, 3);
        bool ok = recompose(hf) == n && check_side_conditions(hf);
        for (const auto& t : hf.terms) ok = ok && is_exp_prime(t.q);
        if (!ok) ++bad;
      }
    });
    os << "n in [2," << c5 << "]: " << bad << " failures";
    return bad == 0;
  }});

  specs.push_back({6, "hyper3 uniqueness oracle", 60.0, [&](std::ostringstream& os) {
    const std::int64_t hi = full ? 512 : 128;
    std::atomic<std::size_t> bad{0};
    parallel_for(static_cast<std::size_t>(hi - 1), jobs, [&](std::size_t i) {
      const BigInt n(static_cast<long>(i + 2));
      const auto reps = enumerate_hyper3_reps(n, 512);
      if (reps.size() != 1 || !same_terms(reps[0], hyper_factorize(n, 3))) ++bad;
    });
    os << "n in [2," << hi << "]: " << bad << " failures";
    return bad == 0;
  }});

  specs.push_back({7, "exp-prime lemma equivalence", 30.0, [&](std::ostringstream& os) {
    const std::int64_t hi = full ? 100000 : 10000;
    std::atomic<std::size_t> bad{0};
    constexpr std::int64_t kChunk = 1024;
    parallel_for(static_cast<std::size_t>((hi - 1) / kChunk + 1), jobs, [&](std::size_t c) {
      const std::int64_t lo = 1 + static_cast<std::int64_t>(c) * kChunk;
      for (std::int64_t q = lo; q < std::min(hi + 1, lo + kChunk); ++q) {
        if (is_exp_prime(q) != is_exp_prime_bf(q)) ++bad;
      }
    });
    os << "q in [1," << hi << "]: " << bad << " disagreements";
    return bad == 0;
  }});

  specs.push_back({8, "L-series for xy", 60.0, [&](std::ostringstream& os) {
    const std::int64_t n = full ? 10000 : 1000;
    const auto op = parse_op_expr("x*y", 2, {}, n1);
    const auto b = default_bounds(op, 1, n);
    const auto tac = gen_TAC(op, comb_leaves(op, n, b, jobs), n, 64, b);
    const auto table = coeff_table(tac, n, "TAC");
    std::size_t off = 0;
    for (std::int64_t i = 1; i <= n; ++i) off += table.at(i) != 1;
    const bool series_equal = lseries_partial(table, "2", n).value == zeta_partial("2", n).value;
    const std::vector<CombPtr> t4{comb_leaf(3), comb_leaf(5), comb_apply(15, comb_leaf(3), comb_leaf(5)),
                                  comb_apply(15, comb_leaf(5), comb_leaf(3))};
    const auto small = coeff_table(t4, 15);
    std::size_t nonzero = 0;
    for (std::int64_t i = 1; i <= 15; ++i) nonzero += small.at(i) != 0;
    const bool four = nonzero == 3 && small.at(3) == 1 && small.at(5) == 1 && small.at(15) == 2;
    os << "N=" << n << ": " << off << " coefficients != 1; L(2)=zeta(2) exactly: " << series_equal
       << "; 4-element T {3:1,5:1,15:2}: " << four;
    return off == 0 && series_equal && four;
  }});

  specs.push_back({9, "extended Fermat theorems", 120.0, [&](std::ostringstream& os) {
    const std::uint64_t pmax = full ? 500 : 100;
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p < pmax; ++p) {
      if (is_probable_prime(BigInt(static_cast<unsigned long>(p)))) primes.push_back(p);
    }
    std::vector<std::size_t> cases(primes.size()), bad(primes.size());
    std::vector<std::string> first(primes.size());
    parallel_for(primes.size(), jobs, [&](std::size_t i) {
      const std::uint64_t p = primes[i];
      for (long k = 1; k <= 20; ++k) {
        if (static_cast<std::uint64_t>(k) % p == 0) continue;
        for (long a = 1; a <= 20; ++a) {
          ++cases[i];
          const auto r = fermat_kxy_check(k, a, p);
          const BigInt closed = kxy_fold_closed(k, a, p) + (tamper ? 1 : 0);
          if (!r.ok() || closed != r.fold) {
            if (bad[i]++ == 0) first[i] = "kxy k=" + std::to_string(k) + " a=" + std::to_string(a) + " p=" + std::to_string(p);
          }
        }
      }
      for (long h = -3; h <= 3; ++h) {
        for (long v = 2; v <= 6; ++v) {
          if (static_cast<std::uint64_t>(v) % p == 0) continue;
          for (long k = 1; k <= 10; ++k) {
            ++cases[i];
            const auto r = fermat_linear_check(h * (v - 1), v, h, k, p);
            if (!r.ok() || linear_fold_closed(h * (v - 1), v, k, p) != r.fold) {
              if (bad[i]++ == 0) first[i] = "linear h=" + std::to_string(h) + " v=" + std::to_string(v) + " k=" + std::to_string(k) + " p=" + std::to_string(p);
            }
          }
        }
      }
    });
    std::size_t total = 0, failures = 0;
    std::string example;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      total += cases[i];
      failures += bad[i];
      if (example.empty()) example = first[i];
    }
    os << "p < " << pmax << ": " << total << " cases, " << failures << " counterexamples";
    if (!example.empty()) os << " (first: " << example << ")";
    return failures == 0;
  }});

  specs.push_back({10, "Goldbach variant for x^2+y^2", 120.0, [&](std::ostringstream& os) {
    const std::int64_t hi = full ? 100000 : 10000;
    const auto op = parse_op_expr("x^2+y^2", 2, {}, n1);
    const auto base = prime_set(op, 1, hi, default_bounds(op, 1, hi), jobs).explicit_elements();
    const auto fails = cover_scan(base, parse_op_expr("x+y", 2, {}, n1), 4, hi, jobs);
    os << "n in [4," << hi << "]: " << fails.size() << " failures";
    return fails.empty();
  }});

  specs.push_back({11, "FLT bridge at desk scale", 60.0, [&](std::ostringstream& os) {
    const std::int64_t hi = full ? 1000000 : 100000;
    const auto f = parse_op_expr("x^3+y^3", 2, {}, n1);
    const auto g = parse_op_expr("x^3", 1, {}, n1);
    auto fb = default_bounds(f, 1, hi);
    auto gb = default_bounds(g, 1, hi);
    fb.radius = gb.radius = 100;
    const auto inter = composite_intersection(f, g, 1, hi, fb, gb, nullptr, jobs);
    const auto cover = prime_cover_check(f, g, 1, hi, fb, gb, jobs);
    const auto f2 = parse_op_expr("x^2+y^2", 2, {}, n1);
    const auto g2 = parse_op_expr("x^2", 1, {}, n1);
    const auto neg = composite_intersection(f2, g2, 1, 100, default_bounds(f2, 1, 100), default_bounds(g2, 1, 100),
                                            nullptr, jobs);
    bool has25 = false;
    for (const auto& e : neg) {
      has25 = has25 || (e.value == 25 && e.f_args == std::vector<std::int64_t>{3, 4} &&
                        e.g_args == std::vector<std::int64_t>{5});
    }
    os << "window [1," << hi << "]: intersection size " << inter.size() << ", covered=" << cover.covered
       << ", consistent=" << cover.consistent << "; control 25 = 3,4|5: " << has25;
    return inter.empty() && cover.covered && cover.consistent && has25;
  }});

  specs.push_back({12, "Lagrange four-square scan", 30.0, [&](std::ostringstream& os) {
    const std::int64_t hi = full ? 10000 : 1000;
    const auto op = parse_op_expr("x1^2+x2^2+x3^2+x4^2", 4, {}, DomainSpec::naturals0());
    const auto reps = representable_range(op, 1, hi, default_bounds(op, 1, hi), jobs);
    std::size_t bad = 0;
    for (const auto& r : reps) bad += !r.has_value();
    os << "n in [1," << hi << "]: " << bad << " failures";
    return bad == 0;
  }});

  specs.push_back({13, "superscript notation", 5.0, [&](std::ostringstream& os) {
    bool ok = true;
    // Left-nested tree <-> [0,1,2].
    const auto x = HyperFormula::leaf("x");
    const auto t1 = HyperFormula::apply(2, HyperFormula::apply(2, HyperFormula::apply(2, x, x), x), x);
    const auto f1 = flatten(t1);
    ok = ok && f1.supers == std::vector<std::int64_t>{0, 1, 2} && structure(f1) == t1;
    ok = ok && parse_hyper(print_hyper(f1)) == f1;
    // Mixed form with an explicit inner superscript <-> [1,0,5,4].
    const auto f2 = parse_hyper("(x o2 (x o2 x)) o2 y o2^4 z");
    const auto t2 = HyperFormula::apply(
        2, HyperFormula::apply(2, x, HyperFormula::apply(2, x, x)),
        HyperFormula::apply(2, HyperFormula::leaf("y"), HyperFormula::leaf("z")));
    ok = ok && f2.supers == std::vector<std::int64_t>{1, 0, 5, 4} && structure(f2) == t2;
    ok = ok && parse_hyper(print_hyper(f2)) == f2 && structure(flatten(t2)) == t2;
    const bool examples = ok;
    std::size_t bad = 0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
      const auto t = sample_formula(i);
      const auto flat = flatten(t);
      if (!(structure(flat) == t) || !(parse_hyper(print_hyper(flat)) == flat)) ++bad;
    }
    os << "worked examples: " << examples << "; 1000 trees: " << bad << " round-trip failures";
    return examples && bad == 0;
  }});

  std::vector<CriterionResult> out;
  for (const auto& s : specs) {
    CriterionResult r;
    r.id = s.id;
    r.name = s.name;
    r.limit_seconds = s.limit;
    std::ostringstream os;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r.correct = s.run(os);
    } catch (const std::exception& e) {
      os << " error: " << e.what();
      r.correct = false;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.detail = os.str();
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace nt
