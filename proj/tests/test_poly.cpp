#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gpdual/polynomial.hpp"

using namespace gpdual;

namespace {

Ring ring31(int n, OrderKind k = OrderKind::grevlex) {
  return Ring::make(PrimeField(31), n, k);
}

SparsePolynomial var(const Ring& r, int i) { return SparsePolynomial::variable(r, i); }

}  // namespace

TEST_CASE("grevlex and lex orders on classic triples") {
  /* in 3 variables: x0 > x1 > x2 */
  auto ord_g = MonomialOrder::make(OrderKind::grevlex, 3);
  auto ord_l = MonomialOrder::make(OrderKind::lex, 3);
  Monomial x2y = Monomial::var(3, 0, 2).mul(Monomial::var(3, 1));   // x^2 y
  Monomial xz2 = Monomial::var(3, 0).mul(Monomial::var(3, 2, 2));   // x z^2
  Monomial y3 = Monomial::var(3, 1, 3);                             // y^3
  CHECK(ord_g.greater(x2y, xz2));
  CHECK(ord_g.greater(y3, xz2));  // grevlex: fewer trailing variables wins
  CHECK(ord_l.greater(x2y, xz2));
  CHECK(ord_l.greater(xz2, y3));  // lex: any x beats pure y
  /* degree dominates in grevlex */
  CHECK(ord_g.greater(y3, Monomial::var(3, 0, 2)));
  CHECK(ord_l.greater(Monomial::var(3, 0, 2), y3));
}

TEST_CASE("binomial cube over F31") {
  Ring r = ring31(1);
  auto x = var(r, 0);
  auto one = SparsePolynomial::constant(r, 1);
  auto p = (x + one) * (x + one) * (x + one);
  /* x^3 + 3x^2 + 3x + 1 */
  REQUIRE(p.size() == 4);
  CHECK(p.terms()[0].m.deg == 3);
  CHECK(p.terms()[0].c == 1);
  CHECK(p.terms()[1].c == 3);
  CHECK(p.terms()[2].c == 3);
  CHECK(p.terms()[3].c == 1);
}

TEST_CASE("arithmetic is exact and cancels") {
  Ring r = ring31(3);
  auto x = var(r, 0), y = var(r, 1), z = var(r, 2);
  auto f = x * y + z * z;
  CHECK((f - f).is_zero());
  CHECK((f + (-f)).is_zero());
  auto g = f.scaled(30);  // -f
  CHECK((f + g).is_zero());
  CHECK(f.monic().leading_coeff() == 1);
  /* distributivity spot check */
  auto a = (x + y) * (x - y);
  auto b = x * x - y * y;
  CHECK(a == b);
}

TEST_CASE("evaluation and derivative") {
  Ring r = ring31(2);
  auto x = var(r, 0), y = var(r, 1);
  auto f = x * x * y + y.scaled(5);  // x^2 y + 5y
  std::vector<std::uint32_t> pt{3, 4};
  CHECK(f.evaluate(pt) == PrimeField(31).reduce(9 * 4 + 20));
  auto fx = f.derivative(0);  // 2xy
  CHECK(fx.evaluate(pt) == PrimeField(31).reduce(2 * 3 * 4));
  auto fy = f.derivative(1);  // x^2 + 5
  CHECK(fy.evaluate(pt) == PrimeField(31).reduce(9 + 5));
}

TEST_CASE("restriction of a quadric to a coordinate hyperplane") {
  /* x1 x4 - x2 x3 with x4 :-> 0 leaves -x2 x3 */
  Ring r = ring31(4);
  auto f = var(r, 0) * var(r, 3) - var(r, 1) * var(r, 2);
  Ring target = ring31(4);
  PrimeField fld(31);
  FieldMatrix map(fld, 4, 4);
  map.set(0, 0, 1);
  map.set(1, 1, 1);
  map.set(2, 2, 1);  // x4 row stays zero
  auto g = f.substitute_linear(map, target);
  CHECK(g == -(var(target, 1) * var(target, 2)));
}

TEST_CASE("linear substitution composes with evaluation") {
  Ring src = ring31(3);
  Ring dst = ring31(2);
  PrimeField fld(31);
  auto f = var(src, 0) * var(src, 1) + var(src, 2) * var(src, 2) + var(src, 0);
  auto m = FieldMatrix::from_rows(fld, {{1, 2}, {0, 3}, {4, 5}});
  auto g = f.substitute_linear(m, dst);
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    std::vector<std::uint32_t> z{rng.field_element(fld), rng.field_element(fld)};
    std::vector<std::uint32_t> x = m.mul_vec(z);
    CHECK(f.evaluate(x) == g.evaluate(z));
  }
}

TEST_CASE("dehomogenize merges terms") {
  Ring r = ring31(2);
  Ring t = ring31(1);
  auto x = var(r, 0), y = var(r, 1);
  auto f = x * x + x * y + y * y;  // set y = 1: x^2 + x + 1
  auto g = f.dehomogenize(1, t);
  auto xt = var(t, 0);
  CHECK(g == xt * xt + xt + SparsePolynomial::constant(t, 1));
}

TEST_CASE("homogeneity detection") {
  Ring r = ring31(2);
  auto x = var(r, 0), y = var(r, 1);
  CHECK((x * x + y * y).is_homogeneous());
  CHECK(!(x * x + y).is_homogeneous());
  CHECK(SparsePolynomial::zero(r).is_homogeneous());
}

TEST_CASE("ring mismatch throws") {
  Ring a = ring31(2);
  Ring b = ring31(3);
  CHECK_THROWS_AS(var(a, 0) + var(b, 0), InvariantError);
}

TEST_CASE("jacobian of simple system") {
  Ring r = ring31(2);
  auto x = var(r, 0), y = var(r, 1);
  std::vector<SparsePolynomial> sys{x * x - y, x * y};
  std::vector<std::uint32_t> pt{2, 5};
  auto j = jacobian_at(sys, pt);
  CHECK(j.at(0, 0) == 4);
  CHECK(j.at(0, 1) == 30);
  CHECK(j.at(1, 0) == 5);
  CHECK(j.at(1, 1) == 2);
}
