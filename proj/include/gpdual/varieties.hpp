#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gpdual/exterior.hpp"
#include "gpdual/fmatrix.hpp"
#include "gpdual/polynomial.hpp"
#include "gpdual/rng.hpp"
#include "gpdual/subspace.hpp"

namespace gpdual {

// A dual pair of linear sections.  W is a 7-dimensional space of alternating
// forms (rows are coordinates in the 21-dimensional form space), M is its
// 14-dimensional annihilator under the pairing <form, bivector>.  The cut
// loci are X = {rank-2 bivectors} ∩ P(M) and Y = {rank-4 forms} ∩ P(W).
struct Instance {
  PrimeField field;
  std::uint64_t seed = 0;
  std::string provenance;  // "random" or "engineered"
  Subspace W;              // 7 x 21, RREF basis
  Subspace M;              // 14 x 21, RREF basis
  // Optional witnesses (engineered instances): a rank-2 bivector x lying in M
  // and a rank-4 form y in W whose kernel contains the plane of x.
  std::optional<PluckerVector> witness_x;
  std::optional<TwoForm> witness_y;
};

// Polynomial rings used throughout: grevlex unless stated otherwise.
Ring bivector_ring(const PrimeField& f);  // 21 vars: coordinates on bivectors
Ring form_ring(const PrimeField& f);      // 21 vars: coordinates on 2-forms
Ring section_ring(const PrimeField& f, int nvars);  // restricted coordinates

// The 35 quadrics cutting out decomposable bivectors: the coordinates of
// x wedge x in the 35-dimensional 4-vector space (each with its factor 2).
std::vector<SparsePolynomial> decomposable_quadrics(const Ring& ring);

// The 7 cubics cutting out forms of rank <= 4: the principal 6x6
// sub-Pfaffians of a generic antisymmetric 7x7 matrix of variables.
std::vector<SparsePolynomial> subpfaffian_cubics(const Ring& ring);

// Linear forms on bivector coordinates cutting out the cycle
// {planes meeting K} for a 3-dimensional K: a basis of Lambda^2(Ann K)
// paired against the bivector coordinates.
std::vector<SparsePolynomial> incidence_linear_forms(const Ring& ring,
                                                     const Subspace& k3);

// Local model of that cycle around a fixed plane: the 2x2 minors of a
// generic 2x4 matrix (8 variables), an affine cone of dimension 5.
std::vector<SparsePolynomial> incidence_chart_minors(const Ring& ring8);

// Restrict polynomials in 21 ambient coordinates to a linear subspace: the
// substitution x = basis^T * u maps them into a ring with dim(space) vars.
std::vector<SparsePolynomial> restrict_to_subspace(
    const std::vector<SparsePolynomial>& gens, const Subspace& space,
    const Ring& target);

// Generators for X inside P(M): the 35 quadrics restricted to 14 variables.
std::vector<SparsePolynomial> section_x_ideal(const Instance& inst,
                                              const Ring& ring14);
// Generators for Y inside P(W): the 7 cubics restricted to 7 variables.
std::vector<SparsePolynomial> section_y_ideal(const Instance& inst,
                                              const Ring& ring7);
// Generators for the curve C_y = X ∩ {planes meeting Ker y}, inside P(M).
std::vector<SparsePolynomial> curve_ideal(const Instance& inst,
                                          const TwoForm& y,
                                          const Ring& ring14);

// Draw W uniformly among 7-dimensional form spaces and set M = Ann(W).
Instance random_instance(std::uint64_t seed, std::uint32_t p);

// Build an instance with a planted singular point of Y: choose a plane T
// inside a 3-space K, take y of rank 4 with Ker y = K, and complete W with
// forms vanishing on the bivector of T.  Witnesses are stored.
Instance engineered_singular_instance(std::uint64_t seed, std::uint32_t p);

// Conjugate the rank-4 normal form e0^e1 + e2^e3 by a random basis change;
// the kernel of the result is the span of the last three basis columns.
TwoForm transported_rank4_form(const PrimeField& f, Rng& rng,
                               FieldMatrix* basis_out = nullptr);

// JSON round trip.  Serialization is canonical (ordered keys, normalized
// entries); parsing validates shape, ranges, duality and witnesses, and
// reports the offending field by name.
nlohmann::ordered_json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::ordered_json& j);

// FNV-1a over the canonical serialization.
std::uint64_t instance_hash(const Instance& inst);

}  // namespace gpdual
