#pragma once

#include <cstdint>
#include <vector>

#include "gpdual/polynomial.hpp"

namespace gpdual {

/* Reduced Groebner basis: monic generators, no leading monomial divides
 * another, every tail fully reduced, sorted descending by leading monomial.
 * Unique for (ideal, order), so permuting the input does not change it. */
struct GroebnerBasis {
  Ring ring;
  std::vector<SparsePolynomial> gens;

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> l;
    l.reserve(gens.size());
    for (auto& g : gens) l.push_back(g.leading_monomial());
    return l;
  }
};

struct BuchbergerOptions {
  /* wall-clock budget; 0 means unlimited.  Exceeding it raises BudgetError —
   * callers downgrade to their documented fallback, never to silent success. */
  std::int64_t budget_ms = 0;
  /* If > 0, stop once every remaining S-pair has lcm degree above this bound.
   * Homogeneous input only.  Pairs are selected by ascending lcm degree, so
   * the returned generators carry every leading monomial of the ideal up to
   * this degree: Hilbert-function values in degrees <= max_degree are exact,
   * but the basis as a whole is generally not a Groebner basis. */
  int max_degree = 0;
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_skipped_coprime = 0;
  std::size_t pairs_skipped_chain = 0;
  std::size_t reductions_to_zero = 0;
  std::size_t basis_size = 0;
};

/* Full normal form against an arbitrary generator list (need not be a GB).
 * Deterministic: the lowest-index reducer whose leading monomial divides the
 * current term wins. */
SparsePolynomial normal_form(const SparsePolynomial& f,
                             const std::vector<SparsePolynomial>& gens);

inline SparsePolynomial normal_form(const SparsePolynomial& f, const GroebnerBasis& g) {
  return normal_form(f, g.gens);
}

/* Buchberger with normal pair selection (minimal lcm degree, then generator
 * index) and the coprime + chain skip criteria. */
GroebnerBasis buchberger(const std::vector<SparsePolynomial>& gens,
                         const BuchbergerOptions& opts = {},
                         BuchbergerStats* stats = nullptr);

/* Row-reduce away homogeneous degree-1 generators by substituting them into
 * the rest; returns the rewritten generators in a smaller ring plus the count
 * of eliminated variables.  The graded quotient is unchanged. */
std::pair<std::vector<SparsePolynomial>, int> eliminate_linear_generators(
    const std::vector<SparsePolynomial>& gens);

}  // namespace gpdual
