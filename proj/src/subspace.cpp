#include "gpdual/subspace.hpp"

namespace gpdual {

Subspace Subspace::zero(PrimeField f, std::size_t ambient) {
  return Subspace(FieldMatrix(f, 0, ambient));
}

Subspace Subspace::full(PrimeField f, std::size_t ambient) {
  return Subspace(FieldMatrix::identity(f, ambient));
}

Subspace Subspace::row_space(const FieldMatrix& m) {
  FieldMatrix r = m.rref();
  r.drop_zero_rows();
  return Subspace(std::move(r));
}

Subspace Subspace::from_rref(FieldMatrix m) { return Subspace(std::move(m)); }

bool Subspace::contains(std::span<const std::uint32_t> v) const {
  return coordinates_of(v).has_value();
}

std::optional<std::vector<std::uint32_t>> Subspace::coordinates_of(
    std::span<const std::uint32_t> v) const {
  if (v.size() != ambient()) throw InvariantError("Subspace: ambient mismatch");
  const PrimeField& f = field();
  /* reduce v against the RREF rows; with an RREF basis each row is used at
   * most once, at its pivot column */
  std::vector<std::uint32_t> rem(v.begin(), v.end());
  std::vector<std::uint32_t> coords(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    std::size_t pc = 0;
    while (pc < ambient() && basis_.at(i, pc) == 0) ++pc;
    std::uint32_t c = rem[pc];
    if (!c) continue;
    coords[i] = c;
    for (std::size_t j = pc; j < ambient(); ++j)
      rem[j] = f.sub(rem[j], f.mul(c, basis_.at(i, j)));
  }
  for (auto x : rem)
    if (x) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.dim() > dim()) return false;
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient() != other.ambient()) throw InvariantError("Subspace::sum: ambient mismatch");
  FieldMatrix stacked = basis_;
  for (std::size_t i = 0; i < other.dim(); ++i) stacked.append_row(other.basis_.row(i));
  return row_space(stacked);
}

Subspace Subspace::annihilator() const { return Subspace(basis_.kernel()); }

Subspace Subspace::intersect(const Subspace& other) const {
  /* a ∩ b = ann(ann a + ann b); every step stays RREF-canonical */
  return annihilator().sum(other.annihilator()).annihilator();
}

}  // namespace gpdual
