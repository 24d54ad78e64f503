#pragma once

#include <array>
#include <utility>

#include "gpdual/subspace.hpp"

namespace gpdual {

/* V = F_p^7 throughout.  Lambda^2 V and Lambda^2 V* both get coordinates
 * indexed by pairs (i,j), 0 <= i < j < 7, in lexicographic order; Lambda^4 V
 * by 4-subsets in lexicographic order. */
inline constexpr int kDimV = 7;
inline constexpr int kDimW2 = 21;
inline constexpr int kDimW4 = 35;

int pair_index(int i, int j);
std::pair<int, int> index_pair(int k);
int quad_index(int a, int b, int c, int d);
const std::array<std::array<int, 4>, kDimW4>& quad_table();

/* Alternating bilinear form on V, i.e. a point of Lambda^2 V*.  Kept as the
 * full skew 7x7 matrix; coords() flattens to the 21-vector. */
class TwoForm {
public:
  static TwoForm from_matrix(FieldMatrix m);
  static TwoForm from_coords(PrimeField f, std::span<const std::uint32_t> c21);
  /* y = sum u_s * basis[s] for a 7x21 basis matrix (rows = forms) */
  static TwoForm from_span(PrimeField f, const FieldMatrix& basis21,
                           std::span<const std::uint32_t> u);

  const FieldMatrix& matrix() const { return m_; }
  const PrimeField& field() const { return m_.field(); }
  std::array<std::uint32_t, kDimW2> coords() const;
  bool is_zero() const { return m_.is_zero(); }

private:
  explicit TwoForm(FieldMatrix m) : m_(std::move(m)) {}
  FieldMatrix m_;
};

/* Point of Lambda^2 V in pair coordinates. */
class PluckerVector {
public:
  PluckerVector(PrimeField f, std::array<std::uint32_t, kDimW2> c)
      : f_(f), c_(c) {}

  const PrimeField& field() const { return f_; }
  std::uint32_t operator[](int k) const { return c_[k]; }
  const std::array<std::uint32_t, kDimW2>& coords() const { return c_; }
  bool is_zero() const;
  /* scale so the first nonzero coordinate is 1 (projective representative) */
  PluckerVector normalized() const;
  bool operator==(const PluckerVector& o) const { return f_ == o.f_ && c_ == o.c_; }

private:
  PrimeField f_;
  std::array<std::uint32_t, kDimW2> c_;
};

/* 2-dimensional subspace of V, canonicalized to its RREF basis. */
class TwoPlane {
public:
  /* rows of m span the plane; throws unless the rank is exactly 2 */
  static TwoPlane from_rows(const FieldMatrix& m);
  static TwoPlane from_vectors(PrimeField f, std::span<const std::uint32_t> t1,
                               std::span<const std::uint32_t> t2);

  const FieldMatrix& basis() const { return b_; }
  const PrimeField& field() const { return b_.field(); }
  Subspace as_subspace() const { return Subspace::from_rref(b_); }
  bool operator==(const TwoPlane& o) const { return b_ == o.b_; }

private:
  explicit TwoPlane(FieldMatrix b) : b_(std::move(b)) {}
  FieldMatrix b_;  // 2x7 RREF
};

/* Pfaffian of a skew matrix of even size (expansion along the first active
 * row).  Pf([[0,a],[-a,0]]) = a. */
std::uint32_t pfaffian(const FieldMatrix& skew);

/* entry i = Pf of the 6x6 minor deleting row and column i of a skew 7x7 */
std::array<std::uint32_t, kDimV> sub_pfaffians(const FieldMatrix& skew7);

/* (rank, kernel) of the form's matrix; rank is always even */
std::pair<std::size_t, Subspace> form_rank_kernel(const TwoForm& y);

PluckerVector plucker_embed(const TwoPlane& t);

/* coordinates of x ^ x in Lambda^4 V; zero iff x is decomposable */
std::array<std::uint32_t, kDimW4> wedge_square(const PluckerVector& x);

/* inverse of plucker_embed on decomposable x != 0 (throws otherwise) */
TwoPlane decompose_plucker(const PluckerVector& x);

/* the natural pairing <w, x> = sum_{i<j} w_ij x_ij */
std::uint32_t pair_eval(const TwoForm& w, const PluckerVector& x);

/* wedge of two vectors of V as a PluckerVector */
PluckerVector wedge(PrimeField f, std::span<const std::uint32_t> u,
                    std::span<const std::uint32_t> v);

/* span{ b_r ^ b_s : r < s } in Lambda^2 for a subspace of V (or of V*) */
Subspace wedge2_subspace(const Subspace& k);

/* Pfaffian over any commutative ring element type supporting +,-,*.
 * `zero`/`one` seed the recursion; is_zero prunes. */
template <class T, class IsZero>
T pfaffian_generic(const std::vector<std::vector<T>>& m, T zero, T one,
                   IsZero is_zero) {
  std::vector<int> idx(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) idx[i] = static_cast<int>(i);

  struct Rec {
    const std::vector<std::vector<T>>& m;
    const T& zero;
    const T& one;
    IsZero& is_zero;
    T run(const std::vector<int>& ix) {
      if (ix.empty()) return one;
      T acc = zero;
      int i0 = ix[0];
      for (std::size_t k = 1; k < ix.size(); ++k) {
        const T& a = m[i0][ix[k]];
        if (is_zero(a)) continue;
        std::vector<int> rest;
        rest.reserve(ix.size() - 2);
        for (std::size_t t = 1; t < ix.size(); ++t)
          if (t != k) rest.push_back(ix[t]);
        T term = a * run(rest);
        acc = (k % 2 == 1) ? acc + term : acc - term;
      }
      return acc;
    }
  } rec{m, zero, one, is_zero};
  return rec.run(idx);
}

}  // namespace gpdual
