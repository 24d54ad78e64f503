#include "gpdual/solve.hpp"

#include <algorithm>
#include <cstring>
#include <string>
#include <unordered_map>

#include "gpdual/errors.hpp"
#include "gpdual/fmatrix.hpp"

namespace gpdual {

namespace {

/* ---- univariate polynomials over F_p, little-endian coefficients ---- */

using UPoly = std::vector<std::uint32_t>;

void utrim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int udeg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly umul(const PrimeField& f, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  utrim(out);
  return out;
}

UPoly usub(const PrimeField& f, UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  utrim(a);
  return a;
}

UPoly uscale(const PrimeField& f, UPoly a, std::uint32_t c) {
  for (auto& v : a) v = f.mul(v, c);
  utrim(a);
  return a;
}

/* remainder of a modulo monic-leading b */
UPoly umod(const PrimeField& f, UPoly a, const UPoly& b) {
  utrim(a);
  std::uint32_t leadinv = f.inv(b.back());
  while (udeg(a) >= udeg(b)) {
    std::uint32_t q = f.mul(a.back(), leadinv);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = f.sub(a[shift + i], f.mul(q, b[i]));
    utrim(a);
    if (a.empty()) break;
  }
  return a;
}

UPoly udivexact(const PrimeField& f, UPoly a, const UPoly& b) {
  UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  std::uint32_t leadinv = f.inv(b.back());
  while (udeg(a) >= udeg(b)) {
    std::uint32_t c = f.mul(a.back(), leadinv);
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
    utrim(a);
    if (a.empty()) break;
  }
  if (!a.empty()) throw InvariantError("udivexact: nonzero remainder");
  utrim(q);
  return q;
}

UPoly umonic(const PrimeField& f, UPoly a) {
  utrim(a);
  if (!a.empty()) a = uscale(f, std::move(a), f.inv(a.back()));
  return a;
}

UPoly ugcd(const PrimeField& f, UPoly a, UPoly b) {
  utrim(a);
  utrim(b);
  while (!b.empty()) {
    UPoly r = umod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return umonic(f, std::move(a));
}

/* base^e mod m, for monic-leading m of degree >= 1 */
UPoly upowmod(const PrimeField& f, UPoly base, std::uint64_t e, const UPoly& m) {
  UPoly acc{1};
  base = umod(f, std::move(base), m);
  while (e) {
    if (e & 1) acc = umod(f, umul(f, acc, base), m);
    base = umod(f, umul(f, base, base), m);
    e >>= 1;
  }
  return acc;
}

/* characteristic polynomial det(tI - M): Hessenberg reduction by similarity
 * transforms, then the standard leading-minor recurrence */
UPoly charpoly(const FieldMatrix& mat) {
  const PrimeField& f = mat.field();
  const std::size_t n = mat.rows();
  FieldMatrix h = mat;

  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t piv = 0;
    for (std::size_t r = c + 1; r < n; ++r)
      if (h.at(r, c)) { piv = r; break; }
    if (!piv) continue;
    if (piv != c + 1) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(h.row_mut(piv)[j], h.row_mut(c + 1)[j]);
      for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t t = h.at(i, piv);
        h.set(i, piv, h.at(i, c + 1));
        h.set(i, c + 1, t);
      }
    }
    std::uint32_t inv = f.inv(h.at(c + 1, c));
    for (std::size_t i = c + 2; i < n; ++i) {
      std::uint32_t t = f.mul(h.at(i, c), inv);
      if (!t) continue;
      for (std::size_t j = c; j < n; ++j)
        h.set(i, j, f.sub(h.at(i, j), f.mul(t, h.at(c + 1, j))));
      for (std::size_t r = 0; r < n; ++r)
        h.set(r, c + 1, f.add(h.at(r, c + 1), f.mul(t, h.at(r, i))));
    }
  }

  std::vector<UPoly> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    UPoly term = umul(f, p[k - 1], UPoly{f.neg(h.at(k - 1, k - 1)), 1});
    std::uint32_t prod = 1;
    for (std::size_t m = 1; m < k; ++m) {
      prod = f.mul(prod, h.at(k - m, k - m - 1));
      if (!prod) break;
      std::uint32_t coeff = f.mul(prod, h.at(k - 1 - m, k - 1));
      if (coeff)
        term = usub(f, std::move(term), uscale(f, p[k - 1 - m], coeff));
    }
    p[k] = std::move(term);
  }
  return p[n];
}

/* distinct roots of a monic product of distinct linear factors */
void split_roots(const PrimeField& f, Rng& rng, const UPoly& g,
                 std::vector<std::uint32_t>& out, int depth = 0) {
  if (udeg(g) <= 0) return;
  if (udeg(g) == 1) {
    out.push_back(f.neg(g[0]));
    return;
  }
  if (depth > 64) throw BudgetError("split_roots: splitting budget exhausted");
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::uint32_t a = rng.field_element(f);
    UPoly h = upowmod(f, UPoly{a, 1}, (f.modulus() - 1) / 2, g);
    h = usub(f, std::move(h), UPoly{1});
    UPoly d = ugcd(f, h, g);
    if (udeg(d) > 0 && udeg(d) < udeg(g)) {
      split_roots(f, rng, d, out, depth + 1);
      split_roots(f, rng, udivexact(f, g, d), out, depth + 1);
      return;
    }
  }
  throw BudgetError("split_roots: no splitting element found");
}

std::string monomial_key(const Monomial& m) {
  return std::string(reinterpret_cast<const char*>(m.e.data()), m.n);
}

}  // namespace

std::vector<Monomial> quotient_basis(const GroebnerBasis& gb) {
  const int n = gb.ring.nvars;
  std::vector<Monomial> leads = gb.leading_monomials();
  for (const auto& l : leads)
    if (l.is_one()) return {};  // unit ideal: empty quotient

  // finiteness: every variable needs a pure power among the leads
  std::vector<int> bound(n, -1);
  for (const auto& l : leads) {
    int var = -1;
    bool pure = true;
    for (int i = 0; i < n; ++i) {
      if (!l.e[i]) continue;
      if (var >= 0) { pure = false; break; }
      var = i;
    }
    if (pure && var >= 0 && (bound[var] < 0 || l.e[var] < bound[var]))
      bound[var] = l.e[var];
  }
  std::uint64_t cells = 1;
  for (int i = 0; i < n; ++i) {
    if (bound[i] < 0)
      throw InvariantError("quotient_basis: ideal is not zero-dimensional");
    cells *= static_cast<std::uint64_t>(bound[i]);
    if (cells > 1u << 20)
      throw BudgetError("quotient_basis: staircase too large to enumerate");
  }

  std::vector<Monomial> basis;
  Monomial cur = Monomial::one(n);
  // odometer over the box below the pure powers, keeping non-divisible cells
  auto divisible_by_some_lead = [&](const Monomial& m) {
    for (const auto& l : leads)
      if (l.divides(m)) return true;
    return false;
  };
  for (;;) {
    if (!divisible_by_some_lead(cur)) basis.push_back(cur);
    int i = 0;
    while (i < n) {
      if (cur.e[i] + 1 < bound[i]) {
        ++cur.e[i];
        cur.deg += 1;
        break;
      }
      cur.deg -= cur.e[i];
      cur.e[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  std::sort(basis.begin(), basis.end(), [&](const Monomial& a, const Monomial& b) {
    return gb.ring.order.cmp(a, b) < 0;
  });
  return basis;
}

std::vector<std::vector<std::uint32_t>> zero_dim_points(
    const GroebnerBasis& gb, Rng& rng, const SolveOptions& opts) {
  const PrimeField& f = gb.ring.field;
  const int n = gb.ring.nvars;
  std::vector<Monomial> basis = quotient_basis(gb);
  const std::size_t dim = basis.size();
  if (dim == 0) return {};
  if (!basis[0].is_one())
    throw InvariantError("zero_dim_points: quotient basis misses 1");

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < dim; ++k) index.emplace(monomial_key(basis[k]), k);

  auto expand = [&](const SparsePolynomial& nf, std::span<std::uint32_t> row) {
    for (const Term& t : nf.terms()) {
      auto it = index.find(monomial_key(t.m));
      if (it == index.end())
        throw InvariantError("zero_dim_points: normal form left the staircase");
      row[it->second] = t.c;
    }
  };

  // mult[i][j][k]: coefficient of basis[k] in NF(x_i * basis[j])
  std::vector<FieldMatrix> mult;
  mult.reserve(n);
  for (int i = 0; i < n; ++i) {
    FieldMatrix m(f, dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      SparsePolynomial prod = SparsePolynomial::monomial(
          gb.ring, basis[j].mul(Monomial::var(n, i)), 1);
      expand(normal_form(prod, gb), m.row_mut(j));
    }
    mult.push_back(std::move(m));
  }

  for (int attempt = 0; attempt < opts.max_tries; ++attempt) {
    std::vector<std::uint32_t> c(n);
    bool any = false;
    for (int i = 0; i < n; ++i) {
      c[i] = rng.field_element(f);
      any = any || c[i];
    }
    if (!any) continue;

    FieldMatrix op(f, dim, dim);
    for (int i = 0; i < n; ++i) {
      if (!c[i]) continue;
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t k = 0; k < dim; ++k)
          op.set(r, k, f.add(op.at(r, k), f.mul(c[i], mult[i].at(r, k))));
    }

    UPoly chi = charpoly(op);
    UPoly tp = upowmod(f, UPoly{0, 1}, f.modulus(), chi);  // t^p mod chi
    tp = usub(f, std::move(tp), UPoly{0, 1});
    UPoly rational_part = ugcd(f, tp, chi);
    std::vector<std::uint32_t> eigenvalues;
    split_roots(f, rng, rational_part, eigenvalues);

    bool ambiguous = false;
    std::vector<std::vector<std::uint32_t>> pts;
    for (std::uint32_t lam : eigenvalues) {
      FieldMatrix shifted = op;
      for (std::size_t d = 0; d < dim; ++d)
        shifted.set(d, d, f.sub(shifted.at(d, d), lam));
      FieldMatrix ker = shifted.kernel();
      if (ker.rows() == 0) continue;
      if (ker.rows() > 1) { ambiguous = true; break; }
      // eigenvector as evaluation functional on the quotient basis
      std::uint32_t v1 = ker.at(0, 0);
      if (!v1) continue;  // no evaluation functional at this eigenvalue
      std::uint32_t inv1 = f.inv(v1);
      std::vector<std::uint32_t> pt(n);
      for (int i = 0; i < n; ++i) {
        std::uint32_t acc = 0;
        for (std::size_t k = 0; k < dim; ++k)
          acc = f.add(acc, f.mul(mult[i].at(0, k), ker.at(0, k)));
        pt[i] = f.mul(acc, inv1);
      }
      bool on_variety = true;
      for (const auto& g : gb.gens)
        if (g.evaluate(pt)) { on_variety = false; break; }
      if (on_variety) pts.push_back(std::move(pt));
    }
    if (ambiguous) continue;

    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
  }
  throw BudgetError("zero_dim_points: no separating linear form found");
}

}  // namespace gpdual
