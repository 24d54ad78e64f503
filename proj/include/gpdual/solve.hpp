#pragma once

#include <vector>

#include "gpdual/groebner.hpp"
#include "gpdual/rng.hpp"

namespace gpdual {

// Monomials outside the leading-term ideal, in increasing ring order.
// Throws InvariantError unless the quotient is finite-dimensional (every
// variable must carry a pure power among the leading monomials).
std::vector<Monomial> quotient_basis(const GroebnerBasis& gb);

struct SolveOptions {
  // Fresh separating linear forms tried before giving up on a configuration
  // whose eigenspaces stay entangled (points sharing a value, or a fat point
  // with an embedded tangent direction).
  int max_tries = 8;
};

// All F_p-rational common zeros of a zero-dimensional ideal, each verified
// against every basis element, sorted lexicographically and deduplicated.
// Eigenvalue method: the multiplication matrix of a random linear form on
// the quotient algebra has the evaluation functionals as left eigenvectors.
// Throws InvariantError if the ideal is not zero-dimensional and BudgetError
// if no tried form separates the points.
std::vector<std::vector<std::uint32_t>> zero_dim_points(
    const GroebnerBasis& gb, Rng& rng, const SolveOptions& opts = {});

}  // namespace gpdual
