#include "gpdual/hilbert.hpp"

#include <algorithm>
#include <map>

namespace gpdual {

IntPoly IntPoly::operator+(const IntPoly& o) const {
  IntPoly r;
  r.c.resize(std::max(c.size(), o.c.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
  for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
  r.trim();
  return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return zero();
  IntPoly r;
  r.c.assign(c.size() + o.c.size() - 1, 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i]) continue;
    for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
  }
  r.trim();
  return r;
}

IntPoly IntPoly::shifted(int k) const {
  if (is_zero()) return zero();
  IntPoly r;
  r.c.assign(c.size() + k, 0);
  std::copy(c.begin(), c.end(), r.c.begin() + k);
  return r;
}

IntPoly IntPoly::times_one_minus_t(int k) const {
  IntPoly r = *this;
  for (int i = 0; i < k; ++i) {
    IntPoly next;
    next.c.assign(r.c.size() + 1, 0);
    for (std::size_t j = 0; j < r.c.size(); ++j) {
      next.c[j] += r.c[j];
      next.c[j + 1] -= r.c[j];
    }
    next.trim();
    r = std::move(next);
  }
  return r;
}

IntPoly IntPoly::divided_by_one_minus_t() const {
  /* synthetic division: q_k = sum_{i<=k} c_i, remainder = q(1) must be 0 */
  IntPoly q;
  if (is_zero()) return q;
  q.c.assign(c.size() - 1, 0);
  std::int64_t acc = 0;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    acc += c[k];
    q.c[k] = acc;
  }
  if (acc + c.back() != 0)
    throw InvariantError("IntPoly: not divisible by (1-t)");
  q.trim();
  return q;
}

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw InvariantError("Rational: zero denominator");
  if (den < 0) { num = -num; den = -den; }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) { num /= g; den /= g; }
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num * o.den + o.num * den, den * o.den);
}
Rational Rational::operator*(const Rational& o) const {
  return Rational(num * o.num, den * o.den);
}
Rational Rational::operator/(const Rational& o) const {
  if (o.num == 0) throw InvariantError("Rational: division by zero");
  return Rational(num * o.den, den * o.num);
}

namespace {

using Gens = std::vector<Monomial>;

/* drop generators strictly divisible by another; result sorted for canonical
 * memo keys */
void minimalize(Gens& g) {
  std::sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    for (int i = 0; i < a.n; ++i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
  });
  Gens kept;
  for (auto& m : g) {
    bool red = false;
    for (auto& k : kept)
      if (k.divides(m)) { red = true; break; }
    if (!red) kept.push_back(m);
  }
  g = std::move(kept);
}

struct MemoKey {
  std::vector<std::uint8_t> bytes;
  bool operator<(const MemoKey& o) const { return bytes < o.bytes; }
};

MemoKey key_of(const Gens& g, int nvars) {
  MemoKey k;
  k.bytes.reserve(g.size() * nvars);
  for (auto& m : g)
    for (int i = 0; i < nvars; ++i) k.bytes.push_back(m.e[i]);
  return k;
}

class NumeratorEngine {
public:
  explicit NumeratorEngine(int nvars) : nvars_(nvars) {}

  /* gens must be minimalized and sorted */
  IntPoly run(Gens gens) {
    if (gens.empty()) return IntPoly::one();
    if (gens.size() == 1) {
      if (gens[0].is_one()) return IntPoly::zero();  // ideal = (1)
      IntPoly r = IntPoly::one();
      r.c.resize(gens[0].deg + 1, 0);
      r.c[gens[0].deg] -= 1;
      return r;
    }
    MemoKey key = key_of(gens, nvars_);
    auto memo = memo_.find(key);
    if (memo != memo_.end()) return memo->second;

    IntPoly result = split_or_pivot(gens);
    memo_.emplace(std::move(key), result);
    return result;
  }

private:
  IntPoly split_or_pivot(const Gens& gens) {
    /* union-find on variables to detect support-disjoint components */
    std::array<int, kMaxVars> uf{};
    for (int v = 0; v < nvars_; ++v) uf[v] = v;
    auto find = [&](int x) {
      while (uf[x] != x) x = uf[x] = uf[uf[x]];
      return x;
    };
    for (auto& m : gens) {
      int first = -1;
      for (int v = 0; v < nvars_; ++v) {
        if (!m.e[v]) continue;
        if (first < 0) first = v;
        else uf[find(v)] = find(first);
      }
    }
    std::map<int, Gens> groups;
    for (auto& m : gens) {
      int first = 0;
      while (!m.e[first]) ++first;
      groups[find(first)].push_back(m);
    }

    if (groups.size() > 1) {
      IntPoly prod = IntPoly::one();
      for (auto& [c, part] : groups) prod = prod * run(std::move(part));
      return prod;
    }

    /* pivot on the most shared variable */
    std::array<int, kMaxVars> uses{};
    for (auto& m : gens)
      for (int v = 0; v < nvars_; ++v)
        if (m.e[v]) ++uses[v];
    int pivot = 0;
    for (int v = 1; v < nvars_; ++v)
      if (uses[v] > uses[pivot]) pivot = v;

    /* I + (x_pivot): generators not involving the pivot, plus the pivot */
    Gens added;
    added.push_back(Monomial::var(nvars_, pivot));
    for (auto& m : gens)
      if (!m.e[pivot]) added.push_back(m);
    minimalize(added);

    /* I : x_pivot */
    Gens colon;
    colon.reserve(gens.size());
    for (auto& m : gens) {
      Monomial q = m;
      if (q.e[pivot]) { q.e[pivot] -= 1; q.deg -= 1; }
      colon.push_back(q);
    }
    minimalize(colon);

    return run(std::move(added)) + run(std::move(colon)).shifted(1);
  }

  int nvars_;
  std::map<MemoKey, IntPoly> memo_;
};

}  // namespace

HilbertData hilbert_series(const std::vector<Monomial>& leading_terms, int nvars) {
  Gens g;
  for (auto& m : leading_terms) {
    if (m.n != nvars) throw InvariantError("hilbert_series: variable count mismatch");
    g.push_back(m);
  }
  minimalize(g);
  NumeratorEngine eng(nvars);
  return HilbertData{eng.run(std::move(g)), nvars};
}

HilbertSummary hilbert_polynomial(const HilbertData& h) {
  HilbertSummary s;
  IntPoly n = h.numerator;
  n.trim();
  if (n.is_zero()) {
    s.proj_dim = -1;
    s.degree = 0;
    s.reduced_numerator = n;
    return s;
  }
  int denom = h.nvars;
  while (denom > 0 && n.eval_at_one() == 0) {
    n = n.divided_by_one_minus_t();
    --denom;
  }
  s.reduced_numerator = n;
  if (denom == 0) {
    /* Artinian quotient: the series is the polynomial itself */
    s.proj_dim = -1;
    s.degree = n.eval_at_one();
    return s;
  }
  s.proj_dim = denom - 1;
  s.degree = n.eval_at_one();

  /* HP(d) = sum_i n_i * C(d - i + denom - 1, denom - 1) expanded in d */
  std::vector<Rational> hp(denom, Rational(0));
  for (int i = 0; i <= n.degree(); ++i) {
    if (!n.at(i)) continue;
    /* product (d - i + 1)(d - i + 2)...(d - i + denom - 1) / (denom-1)! */
    std::vector<Rational> poly{Rational(1)};
    for (int k = 1; k <= denom - 1; ++k) {
      std::vector<Rational> next(poly.size() + 1, Rational(0));
      Rational shift(k - i);
      for (std::size_t j = 0; j < poly.size(); ++j) {
        next[j] = next[j] + poly[j] * shift;
        next[j + 1] = next[j + 1] + poly[j];
      }
      poly = std::move(next);
    }
    std::int64_t fact = 1;
    for (int k = 2; k <= denom - 1; ++k) fact *= k;
    for (std::size_t j = 0; j < poly.size(); ++j)
      hp[j] = hp[j] + poly[j] * Rational(n.at(i), fact);
  }
  s.hp = std::move(hp);
  return s;
}

IdealAnalysis analyze_ideal(const std::vector<SparsePolynomial>& gens,
                            const BuchbergerOptions& opts) {
  if (gens.empty()) throw InvariantError("analyze_ideal: empty generator list");
  const int original_nvars = gens.front().ring().nvars;

  auto [rewritten, eliminated] = eliminate_linear_generators(gens);
  std::vector<SparsePolynomial> live;
  for (auto& g : rewritten)
    if (!g.is_zero()) live.push_back(g);

  const Ring small_ring = rewritten.front().ring();
  if (live.empty()) {
    HilbertData series{IntPoly::one().times_one_minus_t(eliminated), original_nvars};
    return IdealAnalysis{GroebnerBasis{small_ring, {}}, eliminated, series,
                         hilbert_polynomial(series), BuchbergerStats{}};
  }
  BuchbergerStats stats;
  GroebnerBasis gb = buchberger(live, opts, &stats);
  HilbertData small = hilbert_series(gb);
  HilbertData series{small.numerator.times_one_minus_t(eliminated), original_nvars};
  HilbertSummary summary = hilbert_polynomial(series);
  return IdealAnalysis{std::move(gb), eliminated, std::move(series),
                       std::move(summary), stats};
}

std::int64_t standard_monomial_count(const std::vector<Monomial>& leads,
                                     int nvars, int d) {
  if (nvars < 1 || d < 0) throw InvariantError("standard_monomial_count: bad arguments");
  std::vector<const Monomial*> relevant;
  for (const Monomial& m : leads)
    if (m.deg <= d) relevant.push_back(&m);

  /* walk every composition of d into nvars parts */
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  e[0] = d;
  std::int64_t count = 0;
  while (true) {
    bool divisible = false;
    for (const Monomial* m : relevant) {
      bool div = true;
      for (int i = 0; i < nvars && div; ++i)
        div = m->e[static_cast<std::size_t>(i)] <= e[static_cast<std::size_t>(i)];
      if (div) {
        divisible = true;
        break;
      }
    }
    if (!divisible) ++count;

    if (e[static_cast<std::size_t>(nvars - 1)] == d) break;
    int i = 0;
    while (e[static_cast<std::size_t>(i)] == 0) ++i;
    int v = e[static_cast<std::size_t>(i)];
    e[static_cast<std::size_t>(i)] = 0;
    e[0] = v - 1;
    e[static_cast<std::size_t>(i + 1)] += 1;
  }
  return count;
}

}  // namespace gpdual
