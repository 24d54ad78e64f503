#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gpdual/fp.hpp"
#include "gpdual/rng.hpp"

namespace gpdual {

/* Dense row-major matrix over F_p.  Value type; all elimination routines are
 * exact, so "rank" and "kernel" mean what they say. */
class FieldMatrix {
public:
  FieldMatrix(PrimeField f, std::size_t rows, std::size_t cols)
      : f_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static FieldMatrix identity(PrimeField f, std::size_t n);
  static FieldMatrix random(PrimeField f, std::size_t rows, std::size_t cols, Rng& rng);
  /* entries may be any int64; they are reduced mod p */
  static FieldMatrix from_rows(PrimeField f,
                               const std::vector<std::vector<std::int64_t>>& rows);

  const PrimeField& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, std::uint32_t v) { a_[i * cols_ + j] = v; }

  std::span<std::uint32_t> row_mut(std::size_t i) {
    return {a_.data() + i * cols_, cols_};
  }
  std::span<const std::uint32_t> row(std::size_t i) const {
    return {a_.data() + i * cols_, cols_};
  }

  FieldMatrix transpose() const;
  FieldMatrix mul(const FieldMatrix& rhs) const;
  std::vector<std::uint32_t> mul_vec(std::span<const std::uint32_t> v) const;

  /* in place; returns rank, appends pivot column indices if requested */
  std::size_t rref_in_place(std::vector<std::size_t>* pivots = nullptr);
  FieldMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  std::size_t rank() const;

  /* RREF basis of { v : M v = 0 }, one row per kernel basis vector */
  FieldMatrix kernel() const;

  std::uint32_t determinant() const;
  /* throws on singular input */
  FieldMatrix inverse() const;

  void append_row(std::span<const std::uint32_t> r);
  void drop_zero_rows();

  bool is_zero() const;
  bool is_skew() const;
  bool operator==(const FieldMatrix& o) const {
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

private:
  PrimeField f_;
  std::size_t rows_, cols_;
  std::vector<std::uint32_t> a_;
};

}  // namespace gpdual
