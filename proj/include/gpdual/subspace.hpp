#pragma once

#include <optional>

#include "gpdual/fmatrix.hpp"

namespace gpdual {

/* Linear subspace of F_p^n stored as an RREF basis, which makes equality of
 * subspaces equality of matrices.  The ambient space may be V, its dual, or
 * an exterior power: the pairing in use is always the standard dot product in
 * the fixed coordinate basis, so "annihilator" is a right kernel. */
class Subspace {
public:
  static Subspace zero(PrimeField f, std::size_t ambient);
  static Subspace full(PrimeField f, std::size_t ambient);
  static Subspace row_space(const FieldMatrix& m);
  /* basis already in RREF with no zero rows; trusted fast path */
  static Subspace from_rref(FieldMatrix m);

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient() const { return basis_.cols(); }
  const PrimeField& field() const { return basis_.field(); }
  const FieldMatrix& basis() const { return basis_; }

  bool contains(std::span<const std::uint32_t> v) const;
  bool contains(const Subspace& other) const;

  /* coordinates of v in the RREF basis, or empty if v is outside */
  std::optional<std::vector<std::uint32_t>> coordinates_of(
      std::span<const std::uint32_t> v) const;

  Subspace intersect(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  Subspace annihilator() const;

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

private:
  explicit Subspace(FieldMatrix basis) : basis_(std::move(basis)) {}
  FieldMatrix basis_;
};

}  // namespace gpdual
