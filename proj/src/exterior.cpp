#include "gpdual/exterior.hpp"

#include <algorithm>

namespace gpdual {

int pair_index(int i, int j) {
  if (i < 0 || j <= i || j >= kDimV) throw InvariantError("pair_index: bad pair");
  return i * kDimV - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<int, int> index_pair(int k) {
  for (int i = 0, base = 0; i < kDimV - 1; ++i) {
    int run = kDimV - 1 - i;
    if (k < base + run) return {i, i + 1 + (k - base)};
    base += run;
  }
  throw InvariantError("index_pair: out of range");
}

const std::array<std::array<int, 4>, kDimW4>& quad_table() {
  static const auto table = [] {
    std::array<std::array<int, 4>, kDimW4> t{};
    int n = 0;
    for (int a = 0; a < kDimV; ++a)
      for (int b = a + 1; b < kDimV; ++b)
        for (int c = b + 1; c < kDimV; ++c)
          for (int d = c + 1; d < kDimV; ++d) t[n++] = {a, b, c, d};
    return t;
  }();
  return table;
}

int quad_index(int a, int b, int c, int d) {
  const auto& t = quad_table();
  std::array<int, 4> key{a, b, c, d};
  auto it = std::lower_bound(t.begin(), t.end(), key);
  if (it == t.end() || *it != key) throw InvariantError("quad_index: bad subset");
  return static_cast<int>(it - t.begin());
}

TwoForm TwoForm::from_matrix(FieldMatrix m) {
  if (m.rows() != kDimV || m.cols() != kDimV || !m.is_skew())
    throw InvariantError("TwoForm: matrix must be skew 7x7");
  return TwoForm(std::move(m));
}

TwoForm TwoForm::from_coords(PrimeField f, std::span<const std::uint32_t> c21) {
  if (c21.size() != kDimW2) throw InvariantError("TwoForm: need 21 coords");
  FieldMatrix m(f, kDimV, kDimV);
  for (int k = 0; k < kDimW2; ++k) {
    auto [i, j] = index_pair(k);
    m.set(i, j, c21[k]);
    m.set(j, i, f.neg(c21[k]));
  }
  return TwoForm(std::move(m));
}

TwoForm TwoForm::from_span(PrimeField f, const FieldMatrix& basis21,
                           std::span<const std::uint32_t> u) {
  if (basis21.cols() != kDimW2 || u.size() != basis21.rows())
    throw InvariantError("TwoForm::from_span: shape mismatch");
  std::array<std::uint32_t, kDimW2> c{};
  for (std::size_t s = 0; s < basis21.rows(); ++s) {
    if (!u[s]) continue;
    for (int k = 0; k < kDimW2; ++k)
      c[k] = f.add(c[k], f.mul(u[s], basis21.at(s, k)));
  }
  return from_coords(f, c);
}

std::array<std::uint32_t, kDimW2> TwoForm::coords() const {
  std::array<std::uint32_t, kDimW2> c{};
  for (int k = 0; k < kDimW2; ++k) {
    auto [i, j] = index_pair(k);
    c[k] = m_.at(i, j);
  }
  return c;
}

bool PluckerVector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
}

PluckerVector PluckerVector::normalized() const {
  for (auto v : c_) {
    if (!v) continue;
    std::uint32_t s = f_.inv(v);
    std::array<std::uint32_t, kDimW2> out{};
    for (int k = 0; k < kDimW2; ++k) out[k] = f_.mul(c_[k], s);
    return PluckerVector(f_, out);
  }
  return *this;
}

TwoPlane TwoPlane::from_rows(const FieldMatrix& m) {
  if (m.cols() != kDimV) throw InvariantError("TwoPlane: ambient must be 7");
  FieldMatrix r = m.rref();
  r.drop_zero_rows();
  if (r.rows() != 2) throw InvariantError("TwoPlane: rank is not 2");
  return TwoPlane(std::move(r));
}

TwoPlane TwoPlane::from_vectors(PrimeField f, std::span<const std::uint32_t> t1,
                                std::span<const std::uint32_t> t2) {
  FieldMatrix m(f, 2, kDimV);
  for (int j = 0; j < kDimV; ++j) {
    m.set(0, j, t1[j]);
    m.set(1, j, t2[j]);
  }
  return from_rows(m);
}

namespace {

std::uint32_t pfaffian_rec(const FieldMatrix& m, std::vector<int>& ix) {
  const PrimeField& f = m.field();
  if (ix.empty()) return 1;
  std::uint32_t acc = 0;
  int i0 = ix[0];
  for (std::size_t k = 1; k < ix.size(); ++k) {
    std::uint32_t a = m.at(i0, ix[k]);
    if (!a) continue;
    std::vector<int> rest;
    rest.reserve(ix.size() - 2);
    for (std::size_t t = 1; t < ix.size(); ++t)
      if (t != k) rest.push_back(ix[t]);
    std::uint32_t term = f.mul(a, pfaffian_rec(m, rest));
    acc = (k % 2 == 1) ? f.add(acc, term) : f.sub(acc, term);
  }
  return acc;
}

}  // namespace

std::uint32_t pfaffian(const FieldMatrix& skew) {
  if (!skew.is_skew() || skew.rows() % 2 != 0)
    throw InvariantError("pfaffian: need a skew matrix of even size");
  std::vector<int> ix(skew.rows());
  for (std::size_t i = 0; i < skew.rows(); ++i) ix[i] = static_cast<int>(i);
  return pfaffian_rec(skew, ix);
}

std::array<std::uint32_t, kDimV> sub_pfaffians(const FieldMatrix& skew7) {
  if (skew7.rows() != kDimV || !skew7.is_skew())
    throw InvariantError("sub_pfaffians: need a skew 7x7 matrix");
  std::array<std::uint32_t, kDimV> out{};
  for (int drop = 0; drop < kDimV; ++drop) {
    std::vector<int> ix;
    for (int i = 0; i < kDimV; ++i)
      if (i != drop) ix.push_back(i);
    out[drop] = pfaffian_rec(skew7, ix);
  }
  return out;
}

std::pair<std::size_t, Subspace> form_rank_kernel(const TwoForm& y) {
  std::size_t rk = y.matrix().rank();
  return {rk, Subspace::from_rref(y.matrix().kernel())};
}

PluckerVector plucker_embed(const TwoPlane& t) {
  const PrimeField& f = t.field();
  const FieldMatrix& b = t.basis();
  std::array<std::uint32_t, kDimW2> c{};
  for (int k = 0; k < kDimW2; ++k) {
    auto [i, j] = index_pair(k);
    c[k] = f.sub(f.mul(b.at(0, i), b.at(1, j)), f.mul(b.at(0, j), b.at(1, i)));
  }
  return PluckerVector(f, c);
}

std::array<std::uint32_t, kDimW4> wedge_square(const PluckerVector& x) {
  const PrimeField& f = x.field();
  std::array<std::uint32_t, kDimW4> out{};
  for (int n = 0; n < kDimW4; ++n) {
    auto [a, b, c, d] = quad_table()[n];
    /* (e_a^e_b)^(e_c^e_d) - (e_a^e_c)^(e_b^e_d) + (e_a^e_d)^(e_b^e_c),
     * each unordered factorization occurring twice in x^x */
    std::uint32_t v = f.mul(x[pair_index(a, b)], x[pair_index(c, d)]);
    v = f.sub(v, f.mul(x[pair_index(a, c)], x[pair_index(b, d)]));
    v = f.add(v, f.mul(x[pair_index(a, d)], x[pair_index(b, c)]));
    out[n] = f.add(v, v);
  }
  return out;
}

TwoPlane decompose_plucker(const PluckerVector& x) {
  const PrimeField& f = x.field();
  if (x.is_zero()) throw InvariantError("decompose_plucker: zero vector");
  auto w2 = wedge_square(x);
  if (!std::all_of(w2.begin(), w2.end(), [](std::uint32_t v) { return v == 0; }))
    throw InvariantError("decompose_plucker: vector is not decomposable");
  /* for x = u^v the skew matrix X = u v^T - v u^T has row space span{u,v} */
  FieldMatrix m(f, kDimV, kDimV);
  for (int k = 0; k < kDimW2; ++k) {
    auto [i, j] = index_pair(k);
    m.set(i, j, x[k]);
    m.set(j, i, f.neg(x[k]));
  }
  return TwoPlane::from_rows(m);
}

std::uint32_t pair_eval(const TwoForm& w, const PluckerVector& x) {
  const PrimeField& f = w.field();
  std::uint32_t acc = 0;
  for (int k = 0; k < kDimW2; ++k) {
    auto [i, j] = index_pair(k);
    acc = f.add(acc, f.mul(w.matrix().at(i, j), x[k]));
  }
  return acc;
}

PluckerVector wedge(PrimeField f, std::span<const std::uint32_t> u,
                    std::span<const std::uint32_t> v) {
  if (u.size() != kDimV || v.size() != kDimV) throw InvariantError("wedge: need 7-vectors");
  std::array<std::uint32_t, kDimW2> c{};
  for (int k = 0; k < kDimW2; ++k) {
    auto [i, j] = index_pair(k);
    c[k] = f.sub(f.mul(u[i], v[j]), f.mul(u[j], v[i]));
  }
  return PluckerVector(f, c);
}

Subspace wedge2_subspace(const Subspace& k) {
  if (k.ambient() != kDimV) throw InvariantError("wedge2_subspace: ambient must be 7");
  std::size_t d = k.dim();
  FieldMatrix rows(k.field(), d * (d - 1) / 2, kDimW2);
  std::size_t n = 0;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t s = r + 1; s < d; ++s) {
      PluckerVector w = wedge(k.field(), k.basis().row(r), k.basis().row(s));
      for (int t = 0; t < kDimW2; ++t) rows.set(n, t, w[t]);
      ++n;
    }
  return Subspace::row_space(rows);
}

}  // namespace gpdual
