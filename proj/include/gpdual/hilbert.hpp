#pragma once

#include <numeric>
#include <vector>

#include "gpdual/groebner.hpp"

namespace gpdual {

/* Univariate polynomial over Z, coefficient of t^k at index k. */
struct IntPoly {
  std::vector<std::int64_t> c;

  static IntPoly one() { return IntPoly{{1}}; }
  static IntPoly zero() { return IntPoly{{}}; }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  std::int64_t at(std::size_t k) const { return k < c.size() ? c[k] : 0; }
  std::int64_t eval_at_one() const { return std::accumulate(c.begin(), c.end(), std::int64_t{0}); }
  void trim() { while (!c.empty() && c.back() == 0) c.pop_back(); }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly shifted(int k) const;            // * t^k
  IntPoly times_one_minus_t(int k = 1) const;
  /* exact division by (1-t); remainder must vanish */
  IntPoly divided_by_one_minus_t() const;

  bool operator==(const IntPoly&) const = default;
};

struct Rational {
  std::int64_t num = 0, den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);
  Rational operator+(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  bool operator==(const Rational&) const = default;
};

/* Hilbert series of the quotient by a monomial (leading-term) ideal,
 * presented as numerator / (1-t)^nvars. */
struct HilbertData {
  IntPoly numerator;
  int nvars;
  bool operator==(const HilbertData&) const = default;
};

/* numerator via the pivot-variable recursion
 *   HS(I) = HS(I + (x)) + t * HS(I : x)
 * with connected-component splitting and single-generator base cases */
HilbertData hilbert_series(const std::vector<Monomial>& leading_terms, int nvars);

/* Count of degree-d monomials in nvars variables outside the monomial ideal
 * generated by `leads`.  With the ideal's complete set of degree-<=d leading
 * monomials (e.g. from a basis truncated at or above d) this is the exact
 * Hilbert function of the quotient in degree d; a value of zero certifies
 * that the projective scheme is empty. */
std::int64_t standard_monomial_count(const std::vector<Monomial>& leads,
                                     int nvars, int d);

inline HilbertData hilbert_series(const GroebnerBasis& gb) {
  return hilbert_series(gb.leading_monomials(), gb.ring.nvars);
}

/* What the checks actually consume.  proj_dim = -1 flags an Artinian
 * quotient (empty projective scheme); degree is then the total quotient
 * vector-space dimension instead of a leading coefficient. */
struct HilbertSummary {
  int proj_dim = -1;
  std::int64_t degree = 0;
  std::vector<Rational> hp;  // Hilbert polynomial in d, lowest coefficient first
  IntPoly reduced_numerator; // after cancelling all (1-t) factors

  bool same_polynomial(const HilbertSummary& o) const {
    return proj_dim == o.proj_dim && hp == o.hp;
  }
};

HilbertSummary hilbert_polynomial(const HilbertData& h);

/* End-to-end: eliminate linear generators, run Buchberger, return Hilbert
 * data re-expressed over the original variable count. */
struct IdealAnalysis {
  GroebnerBasis gb;        // in the reduced ring if linear forms were eliminated
  int eliminated_vars = 0;
  HilbertData series;      // over the original nvars
  HilbertSummary summary;
  BuchbergerStats stats;
};

IdealAnalysis analyze_ideal(const std::vector<SparsePolynomial>& gens,
                            const BuchbergerOptions& opts = {});

}  // namespace gpdual
