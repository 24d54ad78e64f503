#pragma once

#include <cstdint>
#include <vector>

#include "gpdual/groebner.hpp"
#include "gpdual/varieties.hpp"

namespace gpdual {

// Counters surfaced in reports so sampling behavior is auditable.
struct SampleStats {
  std::size_t draws = 0;             // random candidates examined
  std::size_t hits = 0;              // accepted samples (before dedup)
  std::size_t rank2_rejections = 0;  // forms in W of rank 2 (degenerate)
  std::size_t slice_rounds = 0;      // linear slices solved in the fallback
};

// Points of X = {decomposable bivectors} ∩ P(M), as planes.  For a random
// direction t1 the matrix N(t1)[i][j] = w_i(t1, e_j) always kills t1; a
// second kernel vector t2 yields the plane span(t1,t2), whose bivector then
// lies in M by construction.  Draws until `count` distinct planes are found
// or `max_draws` candidates were examined.
std::vector<TwoPlane> sample_x_planes(const Instance& inst, Rng& rng,
                                      std::size_t count, std::size_t max_draws,
                                      SampleStats* stats = nullptr);

// Points of Y = {forms of rank <= 4} ∩ P(W), projectively normalized and of
// rank exactly 4.  Scans random combinations of the W basis first (the locus
// has codimension 3, so the hit rate is about 14/p^3); once `max_draws` is
// exhausted, switches to slicing Y with 3 random hyperplanes and solving the
// resulting zero-dimensional system, which finds up to 14 points per round.
std::vector<TwoForm> sample_y_forms(const Instance& inst, Rng& rng,
                                    std::size_t count, std::size_t max_draws,
                                    SampleStats* stats = nullptr,
                                    const BuchbergerOptions& gb_opts = {});

// Every F_p-point of the curve C_y = X ∩ {planes meeting Ker y}: each such
// plane meets the 3-space Ker y in a line t1, so scanning the p^2+p+1 lines
// of P(Ker y) and completing each inside ker N(t1) enumerates the curve
// exhaustively.  Results are normalized, deduplicated, and sorted.
std::vector<PluckerVector> curve_points(const Instance& inst, const TwoForm& y);

// Scale a form so its first nonzero pair coordinate is 1.
TwoForm normalize_form(const TwoForm& y);

}  // namespace gpdual
