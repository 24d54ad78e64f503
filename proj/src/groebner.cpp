#include "gpdual/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

namespace gpdual {

namespace {

/* Geobucket: a handful of sorted term vectors with geometrically growing
 * capacities.  Keeps S-polynomial reduction quasi-linear instead of paying a
 * full merge per reduction step. */
class Geobucket {
public:
  Geobucket(const Ring& r) : ring_(r) {}

  void add(std::vector<Term> ts) {
    if (ts.empty()) return;
    std::size_t b = bucket_for(ts.size());
    while (true) {
      if (b >= buckets_.size()) buckets_.resize(b + 1);
      if (buckets_[b].empty()) {
        buckets_[b] = std::move(ts);
        return;
      }
      ts = merge(buckets_[b], ts);
      buckets_[b].clear();
      if (ts.empty()) return;
      if (ts.size() <= cap(b)) {
        buckets_[b] = std::move(ts);
        return;
      }
      ++b;
    }
  }

  /* pop the overall leading term, summing duplicates across buckets; returns
   * false when empty */
  bool pop_leading(Term& out) {
    const PrimeField& f = ring_.field;
    while (true) {
      int best = -1;
      for (std::size_t b = 0; b < buckets_.size(); ++b) {
        if (buckets_[b].empty()) continue;
        if (best < 0 ||
            ring_.order.greater(buckets_[b].front().m, buckets_[best].front().m))
          best = static_cast<int>(b);
      }
      if (best < 0) return false;
      Monomial m = buckets_[best].front().m;
      std::uint32_t c = 0;
      for (auto& bk : buckets_) {
        if (!bk.empty() && bk.front().m == m) {
          c = f.add(c, bk.front().c);
          bk.erase(bk.begin());
        }
      }
      if (c) {
        out = Term{m, c};
        return true;
      }
      /* cancellation; keep looking */
    }
  }

private:
  static std::size_t cap(std::size_t b) { return std::size_t(16) << (2 * b); }

  static std::size_t bucket_for(std::size_t n) {
    std::size_t b = 0;
    while (cap(b) < n) ++b;
    return b;
  }

  std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b) {
    const PrimeField& f = ring_.field;
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      int c = ring_.order.cmp(a[i].m, b[j].m);
      if (c > 0) out.push_back(a[i++]);
      else if (c < 0) out.push_back(b[j++]);
      else {
        std::uint32_t s = f.add(a[i].c, b[j].c);
        if (s) out.push_back(Term{a[i].m, s});
        ++i;
        ++j;
      }
    }
    out.insert(out.end(), a.begin() + i, a.end());
    out.insert(out.end(), b.begin() + j, b.end());
    return out;
  }

  Ring ring_;
  std::vector<std::vector<Term>> buckets_;
};

/* shifted tail of g, negated and scaled: -(c) * (g - LT(g)) * m */
std::vector<Term> scaled_shifted_tail(const SparsePolynomial& g, const Monomial& m,
                                      std::uint32_t c, const PrimeField& f) {
  std::vector<Term> out;
  const auto& ts = g.terms();
  out.reserve(ts.size() - 1);
  for (std::size_t i = 1; i < ts.size(); ++i)
    out.push_back(Term{ts[i].m.mul(m), f.neg(f.mul(ts[i].c, c))});
  return out;
}

SparsePolynomial reduce_full(const Ring& ring, std::vector<Term> start,
                             const std::vector<SparsePolynomial>& gens,
                             const std::vector<Monomial>& leads) {
  const PrimeField& f = ring.field;
  Geobucket bucket(ring);
  bucket.add(std::move(start));
  std::vector<Term> result;
  Term t;
  while (bucket.pop_leading(t)) {
    int red = -1;
    for (std::size_t k = 0; k < leads.size(); ++k) {
      if (leads[k].deg <= t.m.deg && leads[k].divides(t.m)) {
        red = static_cast<int>(k);
        break;
      }
    }
    if (red < 0) {
      result.push_back(t);
      continue;
    }
    const SparsePolynomial& g = gens[red];
    Monomial shift = leads[red].div_into(t.m);
    std::uint32_t c = f.div(t.c, g.leading_coeff());
    if (g.size() > 1) bucket.add(scaled_shifted_tail(g, shift, c, f));
  }
  return SparsePolynomial::from_terms(ring, std::move(result));
}

struct Pair {
  int deg;  // lcm total degree
  int i, j; // i < j
  bool operator<(const Pair& o) const {
    if (deg != o.deg) return deg < o.deg;
    if (j != o.j) return j < o.j;
    return i < o.i;
  }
};

}  // namespace

SparsePolynomial normal_form(const SparsePolynomial& f,
                             const std::vector<SparsePolynomial>& gens) {
  std::vector<SparsePolynomial> active;
  std::vector<Monomial> leads;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!(g.ring() == f.ring())) throw InvariantError("normal_form: ring mismatch");
    active.push_back(g);
    leads.push_back(g.leading_monomial());
  }
  return reduce_full(f.ring(), f.terms(), active, leads);
}

GroebnerBasis buchberger(const std::vector<SparsePolynomial>& input,
                         const BuchbergerOptions& opts, BuchbergerStats* stats) {
  if (input.empty()) throw InvariantError("buchberger: empty generator list");
  const Ring ring = input.front().ring();
  const auto t0 = std::chrono::steady_clock::now();
  auto check_budget = [&] {
    if (!opts.budget_ms) return;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (ms > opts.budget_ms)
      throw BudgetError("buchberger: budget of " + std::to_string(opts.budget_ms) +
                        " ms exceeded");
  };

  std::vector<SparsePolynomial> basis;
  std::vector<Monomial> leads;
  for (auto& g : input) {
    if (!(g.ring() == ring)) throw InvariantError("buchberger: ring mismatch");
    if (g.is_zero()) continue;
    if (opts.max_degree > 0 && !g.is_homogeneous())
      throw InvariantError("buchberger: degree truncation needs homogeneous input");
    basis.push_back(g.monic());
    leads.push_back(g.leading_monomial());
  }
  if (basis.empty()) throw InvariantError("buchberger: all generators are zero");

  std::set<Pair> pending;
  auto push_pairs_for = [&](int t) {
    for (int i = 0; i < t; ++i)
      pending.insert(Pair{int(leads[i].lcm(leads[t]).deg), i, t});
  };
  for (int t = 1; t < int(basis.size()); ++t) push_pairs_for(t);

  BuchbergerStats local;
  while (!pending.empty()) {
    check_budget();
    Pair pr = *pending.begin();
    /* pending is ordered by lcm degree first, so the minimum exceeding the
     * truncation bound means every remaining pair does */
    if (opts.max_degree > 0 && pr.deg > opts.max_degree) break;
    pending.erase(pending.begin());
    local.pairs_considered++;

    const Monomial lcm = leads[pr.i].lcm(leads[pr.j]);

    /* product criterion */
    if (leads[pr.i].coprime_with(leads[pr.j])) {
      local.pairs_skipped_coprime++;
      continue;
    }
    /* chain criterion: some k with LM_k | lcm and both (i,k), (j,k) no longer
     * pending (already treated or never created after elimination) */
    bool chained = false;
    for (int k = 0; k < int(basis.size()) && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!leads[k].divides(lcm)) continue;
      Pair a{int(leads[std::min(pr.i, k)].lcm(leads[std::max(pr.i, k)]).deg),
             std::min(pr.i, k), std::max(pr.i, k)};
      Pair b{int(leads[std::min(pr.j, k)].lcm(leads[std::max(pr.j, k)]).deg),
             std::min(pr.j, k), std::max(pr.j, k)};
      if (!pending.count(a) && !pending.count(b)) chained = true;
    }
    if (chained) {
      local.pairs_skipped_chain++;
      continue;
    }

    /* S-polynomial: both basis elements are monic, heads cancel by design */
    const SparsePolynomial& fi = basis[pr.i];
    const SparsePolynomial& fj = basis[pr.j];
    std::vector<Term> s;
    {
      Monomial mi = leads[pr.i].div_into(lcm);
      Monomial mj = leads[pr.j].div_into(lcm);
      const PrimeField& fld = ring.field;
      for (std::size_t t = 1; t < fi.terms().size(); ++t)
        s.push_back(Term{fi.terms()[t].m.mul(mi), fi.terms()[t].c});
      std::vector<Term> s2;
      for (std::size_t t = 1; t < fj.terms().size(); ++t)
        s2.push_back(Term{fj.terms()[t].m.mul(mj), fld.neg(fj.terms()[t].c)});
      std::sort(s.begin(), s.end(),
                [&](const Term& a, const Term& b) { return ring.order.greater(a.m, b.m); });
      std::sort(s2.begin(), s2.end(),
                [&](const Term& a, const Term& b) { return ring.order.greater(a.m, b.m); });
      Geobucket gb(ring);
      gb.add(std::move(s));
      gb.add(std::move(s2));
      s.clear();
      Term t;
      while (gb.pop_leading(t)) s.push_back(t);
    }

    SparsePolynomial nf = reduce_full(ring, std::move(s), basis, leads);
    if (nf.is_zero()) {
      local.reductions_to_zero++;
      continue;
    }
    basis.push_back(nf.monic());
    leads.push_back(nf.leading_monomial());
    push_pairs_for(int(basis.size()) - 1);
  }

  /* minimalize: keep only generators whose lead is not divisible by another
   * kept lead (process by ascending lead so divisors come first) */
  std::vector<int> order_idx(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) order_idx[i] = int(i);
  std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
    return ring.order.less(leads[a], leads[b]);
  });
  std::vector<int> kept;
  for (int idx : order_idx) {
    bool redundant = false;
    for (int k : kept)
      if (leads[k].divides(leads[idx])) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(idx);
  }

  /* inter-reduce tails for the canonical reduced basis */
  std::vector<SparsePolynomial> reduced;
  std::vector<Monomial> kept_leads;
  for (int k : kept) kept_leads.push_back(leads[k]);
  for (std::size_t a = 0; a < kept.size(); ++a) {
    std::vector<SparsePolynomial> others;
    std::vector<Monomial> other_leads;
    for (std::size_t b = 0; b < kept.size(); ++b) {
      if (b == a) continue;
      others.push_back(basis[kept[b]]);
      other_leads.push_back(kept_leads[b]);
    }
    reduced.push_back(
        reduce_full(ring, basis[kept[a]].terms(), others, other_leads).monic());
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const SparsePolynomial& x, const SparsePolynomial& y) {
              return ring.order.greater(x.leading_monomial(), y.leading_monomial());
            });

  local.basis_size = reduced.size();
  if (stats) *stats = local;
  return GroebnerBasis{ring, std::move(reduced)};
}

std::pair<std::vector<SparsePolynomial>, int> eliminate_linear_generators(
    const std::vector<SparsePolynomial>& gens) {
  if (gens.empty()) return {gens, 0};
  Ring ring = gens.front().ring();
  int eliminated_total = 0;
  std::vector<SparsePolynomial> cur = gens;

  while (true) {
    std::vector<const SparsePolynomial*> linear;
    std::vector<SparsePolynomial> rest;
    for (auto& g : cur) {
      if (g.is_zero()) continue;
      if (g.degree() == 1) {
        if (!g.is_homogeneous())
          throw InvariantError("eliminate_linear_generators: non-homogeneous input");
        linear.push_back(&g);
      } else {
        rest.push_back(g);
      }
    }
    if (linear.empty()) return {cur, eliminated_total};

    const PrimeField& f = ring.field;
    FieldMatrix lm(f, linear.size(), ring.nvars);
    for (std::size_t i = 0; i < linear.size(); ++i)
      for (auto& t : linear[i]->terms()) {
        for (int v = 0; v < ring.nvars; ++v)
          if (t.m.e[v]) lm.set(i, v, t.c);
      }
    std::vector<std::size_t> pivots;
    FieldMatrix r = lm.rref(&pivots);
    int k = static_cast<int>(pivots.size());
    int new_n = ring.nvars - k;
    if (new_n == 0)
      throw InvariantError("eliminate_linear_generators: ideal contains all variables");

    /* substitution map: pivot variable -> minus its RREF tail over the free
     * variables; free variable -> itself */
    std::vector<bool> is_piv(ring.nvars, false);
    for (auto c : pivots) is_piv[c] = true;
    std::vector<int> free_index(ring.nvars, -1);
    int fi = 0;
    for (int v = 0; v < ring.nvars; ++v)
      if (!is_piv[v]) free_index[v] = fi++;

    FieldMatrix map(f, ring.nvars, new_n);
    for (int v = 0; v < ring.nvars; ++v)
      if (!is_piv[v]) map.set(v, free_index[v], 1);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      for (int v = 0; v < ring.nvars; ++v)
        if (!is_piv[v] && r.at(i, v))
          map.set(pivots[i], free_index[v], f.neg(r.at(i, v)));

    Ring target = Ring{f, new_n, MonomialOrder::make(ring.order.kind, new_n)};
    std::vector<SparsePolynomial> next;
    next.reserve(rest.size());
    for (auto& g : rest) {
      SparsePolynomial img = g.substitute_linear(map, target);
      if (!img.is_zero()) next.push_back(img);
    }
    if (next.empty()) next.push_back(SparsePolynomial::zero(target));
    eliminated_total += k;
    ring = target;
    cur = std::move(next);
  }
}

}  // namespace gpdual
