#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "gpdual/errors.hpp"
#include "gpdual/solve.hpp"

using namespace gpdual;

namespace {

using Points = std::vector<std::vector<std::uint32_t>>;

SparsePolynomial parse_terms(const Ring& r,
                             std::vector<std::pair<std::vector<int>, int>> spec) {
  std::vector<Term> ts;
  for (auto& [exps, coeff] : spec) {
    Monomial m = Monomial::one(r.nvars);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      m.e[i] = static_cast<std::uint8_t>(exps[i]);
      m.deg += exps[i];
    }
    ts.push_back({m, r.field.reduce(coeff)});
  }
  return SparsePolynomial::from_terms(r, std::move(ts));
}

Points solve(const Ring& r, const std::vector<SparsePolynomial>& gens,
             std::uint64_t seed = 17) {
  GroebnerBasis gb = buchberger(gens);
  Rng rng(seed);
  return zero_dim_points(gb, rng);
}

/* independent oracle: scan the whole affine space */
Points brute_force(const Ring& r, const std::vector<SparsePolynomial>& gens) {
  Points out;
  const std::uint32_t p = r.field.modulus();
  std::vector<std::uint32_t> pt(r.nvars, 0);
  for (;;) {
    bool zero = true;
    for (const auto& g : gens)
      if (g.evaluate(pt)) { zero = false; break; }
    if (zero) out.push_back(pt);
    int i = 0;
    while (i < r.nvars && ++pt[i] == p) pt[i++] = 0;
    if (i == r.nvars) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("two points on the diagonal") {
  Ring r = Ring::make(PrimeField(31), 2);
  auto f1 = parse_terms(r, {{{2, 0}, 1}, {{0, 0}, -1}});  // x^2 - 1
  auto f2 = parse_terms(r, {{{0, 1}, 1}, {{1, 0}, -1}});  // y - x
  Points expect = {{1, 1}, {30, 30}};
  CHECK(solve(r, {f1, f2}) == expect);
}

TEST_CASE("no rational square root of -1 modulo 31") {
  Ring r = Ring::make(PrimeField(31), 1);
  auto f1 = parse_terms(r, {{{2}, 1}, {{0}, 1}});  // x^2 + 1
  CHECK(solve(r, {f1}).empty());
}

TEST_CASE("origin only") {
  Ring r = Ring::make(PrimeField(31), 2);
  auto gens = {SparsePolynomial::variable(r, 0), SparsePolynomial::variable(r, 1)};
  Points expect = {{0, 0}};
  CHECK(solve(r, gens) == expect);
}

TEST_CASE("fat point on a line is still found") {
  Ring r = Ring::make(PrimeField(31), 1);
  auto f1 = parse_terms(r, {{{2}, 1}});  // x^2
  Points expect = {{0}};
  CHECK(solve(r, {f1}) == expect);
}

TEST_CASE("split quadratic") {
  Ring r = Ring::make(PrimeField(101), 2);
  // (x-2)(x-3) = x^2 - 5x + 6, y - x
  auto f1 = parse_terms(r, {{{2, 0}, 1}, {{1, 0}, -5}, {{0, 0}, 6}});
  auto f2 = parse_terms(r, {{{0, 1}, 1}, {{1, 0}, -1}});
  Points expect = {{2, 2}, {3, 3}};
  CHECK(solve(r, {f1, f2}) == expect);
}

TEST_CASE("solver agrees with exhaustive search") {
  Ring r2 = Ring::make(PrimeField(31), 2);

  SUBCASE("circle meets hyperbola") {
    auto f1 = parse_terms(r2, {{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, -1}});
    auto f2 = parse_terms(r2, {{{1, 1}, 1}, {{0, 0}, -1}});
    CHECK(solve(r2, {f1, f2}) == brute_force(r2, {f1, f2}));
  }
  SUBCASE("cubic resolvent with a square-root ladder") {
    auto f1 = parse_terms(r2, {{{3, 0}, 1}, {{1, 0}, 1}, {{0, 0}, 1}});
    auto f2 = parse_terms(r2, {{{0, 2}, 1}, {{1, 0}, -1}});
    CHECK(solve(r2, {f1, f2}) == brute_force(r2, {f1, f2}));
  }
  SUBCASE("three variables") {
    Ring r3 = Ring::make(PrimeField(31), 3);
    auto f1 = parse_terms(r3, {{{2, 0, 0}, 1}, {{0, 0, 0}, -5}});
    auto f2 = parse_terms(r3, {{{0, 2, 0}, 1}, {{0, 0, 0}, -6}});
    auto f3 = parse_terms(r3, {{{0, 0, 1}, 1}, {{1, 1, 0}, -1}});
    CHECK(solve(r3, {f1, f2, f3}) == brute_force(r3, {f1, f2, f3}));
  }
  SUBCASE("no solutions at all") {
    auto f1 = parse_terms(r2, {{{2, 0}, 1}, {{0, 0}, -1}});
    auto f2 = parse_terms(r2, {{{1, 0}, 1}, {{0, 0}, -5}});  // x = 5, x^2 = 1
    CHECK(solve(r2, {f1, f2}).empty());
    CHECK(brute_force(r2, {f1, f2}).empty());
  }
}

TEST_CASE("positive-dimensional input is rejected") {
  Ring r = Ring::make(PrimeField(31), 2);
  auto gens = {SparsePolynomial::variable(r, 0)};
  GroebnerBasis gb = buchberger(gens);
  CHECK_THROWS_AS(quotient_basis(gb), InvariantError);
}

TEST_CASE("unit ideal has an empty staircase and no points") {
  Ring r = Ring::make(PrimeField(31), 2);
  auto f1 = SparsePolynomial::variable(r, 0);
  auto f2 = f1 + SparsePolynomial::constant(r, 1);
  GroebnerBasis gb = buchberger({f1, f2});
  CHECK(quotient_basis(gb).empty());
  Rng rng(3);
  CHECK(zero_dim_points(gb, rng).empty());
}

TEST_CASE("embedded tangent direction exhausts the separation budget") {
  Ring r = Ring::make(PrimeField(31), 2);
  auto x = SparsePolynomial::variable(r, 0);
  auto y = SparsePolynomial::variable(r, 1);
  GroebnerBasis gb = buchberger({x * x, x * y, y * y});
  CHECK(quotient_basis(gb).size() == 3);
  Rng rng(5);
  CHECK_THROWS_AS(zero_dim_points(gb, rng), BudgetError);
}

TEST_CASE("staircase enumeration is ordered and complete") {
  Ring r = Ring::make(PrimeField(31), 2);
  auto x = SparsePolynomial::variable(r, 0);
  auto y = SparsePolynomial::variable(r, 1);
  GroebnerBasis gb = buchberger({x * x * x, x * y, y * y});
  auto basis = quotient_basis(gb);
  REQUIRE(basis.size() == 4);  // 1, x, y, x^2
  CHECK(basis[0].is_one());
  for (std::size_t i = 1; i < basis.size(); ++i)
    CHECK(r.order.cmp(basis[i - 1], basis[i]) < 0);
  CHECK(basis[3].e[0] == 2);
}

TEST_CASE("seed changes never change the solution set") {
  Ring r = Ring::make(PrimeField(31), 2);
  auto f1 = parse_terms(r, {{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, -2}});
  auto f2 = parse_terms(r, {{{1, 1}, 1}, {{0, 0}, -1}});
  Points first = solve(r, {f1, f2}, 1);
  for (std::uint64_t seed = 2; seed < 8; ++seed)
    CHECK(solve(r, {f1, f2}, seed) == first);
  CHECK(first == brute_force(r, {f1, f2}));
}
