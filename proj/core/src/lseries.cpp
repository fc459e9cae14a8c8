#include "nt/lseries.hpp"

#include <algorithm>
#include <cmath>

#include <mpfr.h>

namespace nt {

using S = Evaluator::Status;

std::size_t CombElement::size() const { return is_leaf() ? 1 : left->size() + right->size(); }

std::string CombElement::to_string() const {
  if (is_leaf()) return std::to_string(value);
  return "(" + left->to_string() + " o " + right->to_string() + ")";
}

CombPtr comb_leaf(std::int64_t v) { return std::make_shared<const CombElement>(CombElement{v, nullptr, nullptr}); }

CombPtr comb_apply(std::int64_t value, CombPtr left, CombPtr right) {
  return std::make_shared<const CombElement>(CombElement{value, std::move(left), std::move(right)});
}

std::vector<std::int64_t> comb_leaves(const OpSpec& op, std::int64_t value_cutoff, const CertBounds& bounds,
                                      unsigned jobs) {
  const std::int64_t lo = std::max<std::int64_t>(1, op.domain.min().value_or(1));
  if (value_cutoff < lo) return {};
  auto t = sieve(op, lo, value_cutoff, bounds, Semantics::top(), jobs);
  std::vector<std::int64_t> out;
  for (const auto& e : t.entries) {
    if (e.verdict == Verdict::Prime || e.verdict == Verdict::Unit) out.push_back(e.n);
  }
  return out;
}

namespace {

constexpr std::size_t kMaxElements = 20'000'000;

bool is_unit_value(const UnitOracle& oracle, Evaluator& ev, std::int64_t v) {
  for (int j = 0; j < oracle.op().arity; ++j) {
    if (oracle.test(ev, j, v).value) return true;
  }
  return false;
}

}  // namespace

std::vector<CombPtr> gen_F(const OpSpec& op, const std::vector<std::int64_t>& leaves, std::int64_t value_cutoff,
                           std::size_t size_cutoff, const CertBounds& bounds) {
  if (op.arity != 2) throw DomainError("prime combinations need a binary op");
  Evaluator ev(op);
  UnitOracle oracle(op, bounds);
  std::vector<std::vector<CombPtr>> by_size(size_cutoff + 1);
  std::vector<std::vector<char>> unit_flag(size_cutoff + 1);
  std::size_t total = 0;
  for (auto v : leaves) {
    if (size_cutoff == 0) break;
    by_size[1].push_back(comb_leaf(v));
    unit_flag[1].push_back(is_unit_value(oracle, ev, v));
  }
  std::int64_t args[2];
  for (std::size_t s = 2; s <= size_cutoff; ++s) {
    for (std::size_t i = 1; i < s; ++i) {
      const auto& as = by_size[i];
      const auto& bs = by_size[s - i];
      for (std::size_t ai = 0; ai < as.size(); ++ai) {
        if (unit_flag[i][ai]) continue;
        for (std::size_t bi = 0; bi < bs.size(); ++bi) {
          if (unit_flag[s - i][bi]) continue;
          args[0] = as[ai]->value;
          args[1] = bs[bi]->value;
          auto r = ev.eval(args);
          if (r.status != S::Value || r.value < 1 || r.value > value_cutoff) continue;
          by_size[s].push_back(comb_apply(r.value, as[ai], bs[bi]));
          unit_flag[s].push_back(is_unit_value(oracle, ev, r.value));
          if (++total > kMaxElements) throw TooLarge("prime combination enumeration exceeds element limit");
        }
      }
    }
  }
  std::vector<CombPtr> out;
  for (auto& level : by_size) {
    for (auto& e : level) out.push_back(std::move(e));
  }
  return out;
}

std::vector<CombPtr> gen_TAC(const OpSpec& op, const std::vector<std::int64_t>& leaves, std::int64_t value_cutoff,
                             std::size_t size_cutoff, const CertBounds& bounds) {
  if (op.arity != 2) throw DomainError("prime combinations need a binary op");
  const auto probe = assoc_comm_probe(op, 8);
  if (!probe.commutative.value || !probe.associative.value) {
    throw DomainError("op is not associative and commutative on samples; canonical forms are undefined");
  }
  Evaluator ev(op);
  UnitOracle oracle(op, bounds);
  const bool mono = oracle.traits().monotone;
  std::vector<std::int64_t> sorted = leaves;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<CombPtr> out;
  std::vector<std::int64_t> primes;
  for (auto v : sorted) {
    if (is_unit_value(oracle, ev, v)) {
      out.push_back(comb_leaf(v));
    } else {
      primes.push_back(v);
    }
  }
  std::int64_t args[2];
  auto dfs = [&](auto&& self, const CombPtr& cur, std::size_t start, std::size_t size) -> void {
    out.push_back(cur);
    if (out.size() > kMaxElements) throw TooLarge("canonical combination enumeration exceeds element limit");
    if (size >= size_cutoff || is_unit_value(oracle, ev, cur->value)) return;
    for (std::size_t k = start; k < primes.size(); ++k) {
      args[0] = cur->value;
      args[1] = primes[k];
      auto r = ev.eval(args);
      if (r.status != S::Value || r.value < 1 || r.value > value_cutoff) {
        if (mono) break;
        continue;
      }
      self(self, comb_apply(r.value, cur, comb_leaf(primes[k])), k, size + 1);
    }
  };
  for (std::size_t k = 0; k < primes.size(); ++k) {
    if (primes[k] > value_cutoff || size_cutoff == 0) continue;
    dfs(dfs, comb_leaf(primes[k]), k, 1);
  }
  return out;
}

CoeffTable coeff_table(const std::vector<CombPtr>& elements, std::int64_t cutoff, std::string source) {
  CoeffTable t;
  t.cutoff = cutoff;
  t.source = std::move(source);
  t.counts.assign(static_cast<std::size_t>(std::max<std::int64_t>(cutoff, 0) + 1), 0);
  for (const auto& e : elements) {
    if (e->value >= 1 && e->value <= cutoff) ++t.counts[static_cast<std::size_t>(e->value)];
  }
  return t;
}

namespace {

constexpr mpfr_prec_t kPrec = 192;  // > 50 decimal digits

struct Exponent {
  bool integral = false;
  unsigned long int_value = 0;
  std::string text;
  double approx = 0.0;
};

Exponent parse_s(std::string_view text) {
  Exponent e;
  e.text = std::string(text);
  if (auto v = parse_bigint(text)) {
    if (*v <= 1) throw DomainError("series need s > 1");
    if (!mpz_fits_ulong_p(v->get_mpz_t()) || *v > 4096) throw DomainError("integer s too large");
    e.integral = true;
    e.int_value = v->get_ui();
    e.approx = static_cast<double>(e.int_value);
    return e;
  }
  mpfr_t s;
  mpfr_init2(s, kPrec);
  int bad = 0;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto p = parse_bigint(text.substr(0, slash));
    auto q = parse_bigint(text.substr(slash + 1));
    if (!p || !q || *q <= 0) {
      bad = 1;
    } else {
      mpq_class r(*p, *q);
      r.canonicalize();
      if (r.get_den() == 1) {
        mpfr_clear(s);
        return parse_s(r.get_num().get_str());
      }
      mpfr_set_q(s, r.get_mpq_t(), MPFR_RNDN);
    }
  } else {
    bad = mpfr_set_str(s, e.text.c_str(), 10, MPFR_RNDN);
  }
  if (bad) {
    mpfr_clear(s);
    throw DomainError("cannot parse s = '" + e.text + "'");
  }
  const bool gt1 = mpfr_cmp_ui(s, 1) > 0;
  e.approx = mpfr_get_d(s, MPFR_RNDN);
  mpfr_clear(s);
  if (!gt1) throw DomainError("series need s > 1");
  return e;
}

std::string decimal_of(mpfr_t v) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.49Re", v);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

// sum weight(i) / i^s for 1 <= i <= n.
template <typename Weight>
SeriesPoint series(std::string_view s_text, std::int64_t n, Weight&& weight) {
  if (n < 1) throw DomainError("series need N >= 1");
  const Exponent s = parse_s(s_text);
  SeriesPoint p;
  p.s = s.text;
  p.n = n;
  p.zeta_tail_bound = std::pow(static_cast<double>(n), 1.0 - s.approx) / (s.approx - 1.0);
  mpfr_t acc;
  mpfr_init2(acc, kPrec);
  if (s.integral) {
    p.exact = true;
    BigInt l = 1;
    for (std::int64_t i = 2; i <= n; ++i) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(i));
    BigInt den;
    mpz_pow_ui(den.get_mpz_t(), l.get_mpz_t(), s.int_value);
    BigInt num = 0, ipow, q;
    for (std::int64_t i = 1; i <= n; ++i) {
      const BigInt w = weight(i);
      if (w == 0) continue;
      mpz_ui_pow_ui(ipow.get_mpz_t(), static_cast<unsigned long>(i), s.int_value);
      mpz_divexact(q.get_mpz_t(), den.get_mpz_t(), ipow.get_mpz_t());
      num += w * q;
    }
    p.value = mpq_class(num, den);
    p.value.canonicalize();
    mpfr_set_q(acc, p.value.get_mpq_t(), MPFR_RNDN);
  } else {
    mpfr_t sv, term;
    mpfr_inits2(kPrec, sv, term, static_cast<mpfr_ptr>(nullptr));
    if (auto slash = p.s.find('/'); slash != std::string::npos) {
      mpq_class r(*parse_bigint(std::string_view(p.s).substr(0, slash)),
                  *parse_bigint(std::string_view(p.s).substr(slash + 1)));
      r.canonicalize();
      mpfr_set_q(sv, r.get_mpq_t(), MPFR_RNDN);
    } else {
      mpfr_set_str(sv, p.s.c_str(), 10, MPFR_RNDN);
    }
    mpfr_neg(sv, sv, MPFR_RNDN);
    mpfr_set_zero(acc, 1);
    for (std::int64_t i = 1; i <= n; ++i) {
      const BigInt w = weight(i);
      if (w == 0) continue;
      mpfr_set_ui(term, static_cast<unsigned long>(i), MPFR_RNDN);
      mpfr_pow(term, term, sv, MPFR_RNDN);
      mpfr_mul_z(term, term, w.get_mpz_t(), MPFR_RNDN);
      mpfr_add(acc, acc, term, MPFR_RNDN);
    }
    mpfr_clears(sv, term, static_cast<mpfr_ptr>(nullptr));
  }
  p.decimal = decimal_of(acc);
  mpfr_clear(acc);
  return p;
}

BigInt count_of(const CoeffTable& t, std::int64_t i) { return BigInt(static_cast<unsigned long>(t.at(i))); }

}  // namespace

SeriesPoint lseries_partial(const CoeffTable& table, std::string_view s, std::int64_t n) {
  return series(s, n, [&](std::int64_t i) { return count_of(table, i); });
}

SeriesPoint zeta_partial(std::string_view s, std::int64_t n) {
  return series(s, n, [](std::int64_t) { return BigInt(1); });
}

SeriesPoint defect_partial(const CoeffTable& table, std::string_view s, std::int64_t n) {
  return series(s, n, [&](std::int64_t i) { return BigInt(count_of(table, i) - 1); });
}

ACProbe assoc_comm_probe(const OpSpec& op, std::int64_t sample_bound) {
  if (op.arity != 2) throw DomainError("probe needs a binary op");
  ACProbe out;
  const auto samples = op.domain.elements_in(-sample_bound, sample_bound);
  const bool whole = op.domain.finite() && samples.size() == op.domain.elements_in(*op.domain.min(), *op.domain.max()).size();
  Evaluator ev(op);
  auto f = [&](const std::optional<BigInt>& a, const std::optional<BigInt>& b) -> std::optional<BigInt> {
    if (!a || !b) return std::nullopt;
    const BigInt args[2] = {*a, *b};
    return ev.eval_big(args);
  };
  out.commutative = {true, whole};
  out.associative = {true, whole};
  for (auto a : samples) {
    for (auto b : samples) {
      if (!out.commutative.value) break;
      if (f(BigInt(a), BigInt(b)) != f(BigInt(b), BigInt(a))) {
        out.commutative = {false, true};
        out.commutative_counterexample = {a, b};
      }
    }
  }
  for (auto a : samples) {
    for (auto b : samples) {
      const auto ab = f(BigInt(a), BigInt(b));
      for (auto c : samples) {
        if (!out.associative.value) break;
        if (f(ab, BigInt(c)) != f(BigInt(a), f(BigInt(b), BigInt(c)))) {
          out.associative = {false, true};
          out.associative_counterexample = {a, b, c};
        }
      }
    }
  }
  return out;
}

}  // namespace nt
