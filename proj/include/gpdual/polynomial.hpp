#pragma once

#include <vector>

#include "gpdual/fmatrix.hpp"
#include "gpdual/monomial.hpp"

namespace gpdual {

struct Ring {
  PrimeField field;
  int nvars;
  MonomialOrder order;

  static Ring make(PrimeField f, int nvars, OrderKind k = OrderKind::grevlex) {
    if (nvars < 1 || nvars > kMaxVars) throw InvariantError("Ring: bad variable count");
    return Ring{f, nvars, MonomialOrder::make(k, nvars)};
  }

  bool operator==(const Ring&) const = default;
};

struct Term {
  Monomial m;
  std::uint32_t c;
};

/* Sparse multivariate polynomial: terms sorted strictly descending in the
 * ring's order, no zero coefficients.  Immutable value semantics; arithmetic
 * checks ring compatibility. */
class SparsePolynomial {
public:
  static SparsePolynomial zero(const Ring& r) { return SparsePolynomial(r, {}); }
  static SparsePolynomial constant(const Ring& r, std::uint32_t c);
  static SparsePolynomial variable(const Ring& r, int i);
  static SparsePolynomial monomial(const Ring& r, const Monomial& m, std::uint32_t c);
  /* normalizes: sorts, combines, strips zeros */
  static SparsePolynomial from_terms(const Ring& r, std::vector<Term> ts);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().m; }
  std::uint32_t leading_coeff() const { return leading_term().c; }
  int degree() const;  // total degree, -1 for zero
  bool is_homogeneous() const;

  SparsePolynomial operator+(const SparsePolynomial& o) const;
  SparsePolynomial operator-(const SparsePolynomial& o) const;
  SparsePolynomial operator*(const SparsePolynomial& o) const;
  SparsePolynomial operator-() const;
  SparsePolynomial scaled(std::uint32_t c) const;
  SparsePolynomial monic() const;
  /* this * (c * m) */
  SparsePolynomial times_term(const Monomial& m, std::uint32_t c) const;

  bool operator==(const SparsePolynomial& o) const {
    if (!(ring_ == o.ring_) || t_.size() != o.t_.size()) return false;
    for (std::size_t i = 0; i < t_.size(); ++i)
      if (!(t_[i].m == o.t_[i].m) || t_[i].c != o.t_[i].c) return false;
    return true;
  }

  std::uint32_t evaluate(std::span<const std::uint32_t> point) const;
  SparsePolynomial derivative(int var) const;

  /* substitute variable `var` := 1, producing a polynomial in nvars-1
   * variables (indices above `var` shift down) */
  SparsePolynomial dehomogenize(int var, const Ring& target) const;

  /* x_i :-> sum_j map[i][j] z_j ; map is nvars(old) x nvars(new) */
  SparsePolynomial substitute_linear(const FieldMatrix& map, const Ring& target) const;

  std::string str(const std::string& stem = "x") const;

private:
  SparsePolynomial(Ring r, std::vector<Term> t) : ring_(std::move(r)), t_(std::move(t)) {}
  Ring ring_;
  std::vector<Term> t_;
};

/* Jacobian of a polynomial list evaluated at a point: rows = polynomials,
 * columns = variables. */
FieldMatrix jacobian_at(const std::vector<SparsePolynomial>& polys,
                        std::span<const std::uint32_t> point);

}  // namespace gpdual
