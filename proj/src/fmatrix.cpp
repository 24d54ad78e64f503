#include "gpdual/fmatrix.hpp"

#include <algorithm>

namespace gpdual {

FieldMatrix FieldMatrix::identity(PrimeField f, std::size_t n) {
  FieldMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FieldMatrix FieldMatrix::random(PrimeField f, std::size_t rows, std::size_t cols,
                                Rng& rng) {
  FieldMatrix m(f, rows, cols);
  for (auto& v : m.a_) v = rng.field_element(f);
  return m;
}

FieldMatrix FieldMatrix::from_rows(PrimeField f,
                                   const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows.front().size();
  FieldMatrix m(f, rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc)
      throw InvariantError("FieldMatrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < nc; ++j) m.set(i, j, f.reduce(rows[i][j]));
  }
  return m;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

FieldMatrix FieldMatrix::mul(const FieldMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InvariantError("FieldMatrix::mul: shape mismatch");
  FieldMatrix r(f_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint32_t aik = at(i, k);
      if (!aik) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        r.set(i, j, f_.add(r.at(i, j), f_.mul(aik, rhs.at(k, j))));
    }
  return r;
}

std::vector<std::uint32_t> FieldMatrix::mul_vec(std::span<const std::uint32_t> v) const {
  if (v.size() != cols_) throw InvariantError("FieldMatrix::mul_vec: length mismatch");
  std::vector<std::uint32_t> r(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      acc += static_cast<std::uint64_t>(at(i, j)) * v[j];
      if ((j & 15) == 15) acc %= f_.modulus();
    }
    r[i] = static_cast<std::uint32_t>(acc % f_.modulus());
  }
  return r;
}

std::size_t FieldMatrix::rref_in_place(std::vector<std::size_t>* pivots) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t sel = r;
    while (sel < rows_ && at(sel, c) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(a_[sel * cols_ + j], a_[r * cols_ + j]);
    std::uint32_t piv = f_.inv(at(r, c));
    for (std::size_t j = c; j < cols_; ++j) set(r, j, f_.mul(at(r, j), piv));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      std::uint32_t m = at(i, c);
      if (!m) continue;
      for (std::size_t j = c; j < cols_; ++j)
        set(i, j, f_.sub(at(i, j), f_.mul(m, at(r, j))));
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

FieldMatrix FieldMatrix::rref(std::vector<std::size_t>* pivots) const {
  FieldMatrix m = *this;
  m.rref_in_place(pivots);
  return m;
}

std::size_t FieldMatrix::rank() const {
  FieldMatrix m = *this;
  return m.rref_in_place();
}

FieldMatrix FieldMatrix::kernel() const {
  std::vector<std::size_t> piv;
  FieldMatrix r = rref(&piv);
  std::vector<bool> is_piv(cols_, false);
  for (auto c : piv) is_piv[c] = true;

  FieldMatrix k(f_, cols_ - piv.size(), cols_);
  std::size_t kr = 0;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (is_piv[c]) continue;
    k.set(kr, c, 1);
    for (std::size_t i = 0; i < piv.size(); ++i)
      k.set(kr, piv[i], f_.neg(r.at(i, c)));
    ++kr;
  }
  /* canonicalize: the free-variable basis is not in RREF on its own */
  k.rref_in_place();
  return k;
}

std::uint32_t FieldMatrix::determinant() const {
  if (rows_ != cols_) throw InvariantError("determinant: matrix not square");
  FieldMatrix m = *this;
  std::uint32_t det = 1;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t sel = c;
    while (sel < rows_ && m.at(sel, c) == 0) ++sel;
    if (sel == rows_) return 0;
    if (sel != c) {
      for (std::size_t j = 0; j < cols_; ++j)
        std::swap(m.a_[sel * cols_ + j], m.a_[c * cols_ + j]);
      det = f_.neg(det);
    }
    det = f_.mul(det, m.at(c, c));
    std::uint32_t piv = f_.inv(m.at(c, c));
    for (std::size_t i = c + 1; i < rows_; ++i) {
      std::uint32_t factor = f_.mul(m.at(i, c), piv);
      if (!factor) continue;
      for (std::size_t j = c; j < cols_; ++j)
        m.set(i, j, f_.sub(m.at(i, j), f_.mul(factor, m.at(c, j))));
    }
  }
  return det;
}

FieldMatrix FieldMatrix::inverse() const {
  if (rows_ != cols_) throw InvariantError("inverse: matrix not square");
  FieldMatrix aug(f_, rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.set(i, j, at(i, j));
    aug.set(i, cols_ + i, 1);
  }
  std::vector<std::size_t> pivots;
  aug.rref_in_place(&pivots);
  /* invertible iff the pivots are exactly the left block's columns */
  if (pivots.size() != rows_ || (rows_ && pivots.back() >= cols_))
    throw InvariantError("inverse: matrix is singular");
  FieldMatrix inv(f_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) inv.set(i, j, aug.at(i, cols_ + j));
  return inv;
}

void FieldMatrix::append_row(std::span<const std::uint32_t> r) {
  if (r.size() != cols_) throw InvariantError("append_row: length mismatch");
  a_.insert(a_.end(), r.begin(), r.end());
  ++rows_;
}

void FieldMatrix::drop_zero_rows() {
  std::size_t w = 0;
  for (std::size_t i = 0; i < rows_; ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j)) { zero = false; break; }
    if (!zero) {
      if (w != i)
        std::copy(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_,
                  a_.begin() + w * cols_);
      ++w;
    }
  }
  rows_ = w;
  a_.resize(rows_ * cols_);
}

bool FieldMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](std::uint32_t v) { return v == 0; });
}

bool FieldMatrix::is_skew() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (at(i, i) != 0) return false;
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != f_.neg(at(j, i))) return false;
  }
  return true;
}

}  // namespace gpdual
