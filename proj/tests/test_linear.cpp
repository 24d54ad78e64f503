#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gpdual/exterior.hpp"
#include "gpdual/fmatrix.hpp"
#include "gpdual/fp.hpp"
#include "gpdual/rng.hpp"
#include "gpdual/subspace.hpp"

using namespace gpdual;

namespace {

std::vector<std::uint32_t> vec(const PrimeField& f, std::vector<std::int64_t> v) {
  std::vector<std::uint32_t> out;
  for (auto x : v) out.push_back(f.reduce(x));
  return out;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField f(31);
  CHECK(f.add(30, 5) == 4);
  CHECK(f.sub(3, 7) == 27);
  CHECK(f.mul(17, 20) == (17 * 20) % 31);
  CHECK(f.neg(0) == 0);
  for (std::uint32_t a = 1; a < 31; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.pow(3, 30) == 1);  // Fermat
  CHECK(f.reduce(-1) == 30);
  CHECK_THROWS_AS(PrimeField(7), InvariantError);   // too small by contract
  CHECK_THROWS_AS(PrimeField(15), InvariantError);  // composite
  CHECK_THROWS_AS(f.inv(0), InvariantError);
}

TEST_CASE("rref, rank and kernel on a singular 2x2") {
  PrimeField f(31);
  auto m = FieldMatrix::from_rows(f, {{1, 2}, {2, 4}});
  CHECK(m.rank() == 1);
  FieldMatrix k = m.kernel();
  CHECK(k.rows() == 1);
  /* kernel is the line through (2, -1) */
  auto expected = Subspace::row_space(FieldMatrix::from_rows(f, {{2, -1}}));
  CHECK(Subspace::from_rref(k) == expected);
  auto mv = m.mul_vec(k.row(0));
  CHECK(mv[0] == 0);
  CHECK(mv[1] == 0);
}

TEST_CASE("kernel times matrix transpose vanishes on random matrices") {
  PrimeField f(101);
  Rng rng(12);
  for (int t = 0; t < 50; ++t) {
    auto m = FieldMatrix::random(f, 4 + rng.below(5), 6 + rng.below(6), rng);
    FieldMatrix k = m.kernel();
    CHECK(m.rank() + k.rows() == m.cols());
    for (std::size_t i = 0; i < k.rows(); ++i) {
      auto prod = m.mul_vec(k.row(i));
      for (auto v : prod) CHECK(v == 0);
    }
  }
}

TEST_CASE("rref is idempotent and canonical") {
  PrimeField f(31);
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    auto m = FieldMatrix::random(f, 5, 8, rng);
    auto r1 = m.rref();
    CHECK(r1.rref() == r1);
    /* scaled row space gives the same RREF */
    FieldMatrix scaled = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        scaled.set(i, j, f.mul(m.at(i, j), 3));
    CHECK(scaled.rref() == r1);
  }
}

TEST_CASE("determinant multiplies and detects singularity") {
  PrimeField f(31);
  Rng rng(77);
  for (int t = 0; t < 40; ++t) {
    auto a = FieldMatrix::random(f, 5, 5, rng);
    auto b = FieldMatrix::random(f, 5, 5, rng);
    CHECK(f.mul(a.determinant(), b.determinant()) == a.mul(b).determinant());
  }
  auto s = FieldMatrix::from_rows(f, {{1, 2}, {2, 4}});
  CHECK(s.determinant() == 0);
}

TEST_CASE("subspace intersection, sum, annihilator") {
  PrimeField f(31);
  auto a = Subspace::row_space(
      FieldMatrix::from_rows(f, {{1, 1, 0, 0, 0}, {0, 0, 1, 0, 0}}));
  auto b = Subspace::row_space(
      FieldMatrix::from_rows(f, {{1, 1, 0, 0, 0}, {0, 0, 0, 1, 0}}));
  auto cap = a.intersect(b);
  CHECK(cap.dim() == 1);
  CHECK(cap == Subspace::row_space(FieldMatrix::from_rows(f, {{1, 1, 0, 0, 0}})));
  CHECK(a.sum(b).dim() == 3);
  CHECK(a.annihilator().dim() == 3);
  CHECK(a.annihilator().annihilator() == a);
  CHECK(a.contains(vec(f, {2, 2, 3, 0, 0})));
  CHECK(!a.contains(vec(f, {1, 0, 0, 0, 0})));
}

TEST_CASE("subspace properties on random data") {
  PrimeField f(101);
  Rng rng(9);
  for (int t = 0; t < 30; ++t) {
    auto a = Subspace::row_space(FieldMatrix::random(f, 3, 9, rng));
    auto b = Subspace::row_space(FieldMatrix::random(f, 4, 9, rng));
    auto cap = a.intersect(b);
    auto sum = a.sum(b);
    CHECK(a.contains(cap));
    CHECK(b.contains(cap));
    CHECK(sum.contains(a));
    CHECK(sum.contains(b));
    CHECK(cap.dim() + sum.dim() == a.dim() + b.dim());
    CHECK(a.annihilator().annihilator() == a);
  }
}

TEST_CASE("pair indexing is the lexicographic bijection") {
  int n = 0;
  for (int i = 0; i < kDimV; ++i)
    for (int j = i + 1; j < kDimV; ++j) {
      CHECK(pair_index(i, j) == n);
      auto [a, b] = index_pair(n);
      CHECK(a == i);
      CHECK(b == j);
      ++n;
    }
  CHECK(n == kDimW2);
  CHECK(quad_index(0, 1, 2, 3) == 0);
  CHECK(quad_index(3, 4, 5, 6) == kDimW4 - 1);
}

TEST_CASE("pfaffian on the generic 4x4 and block 6x6") {
  PrimeField f(31);
  Rng rng(4);
  for (int t = 0; t < 60; ++t) {
    /* generic skew 4x4: pf = a12 a34 - a13 a24 + a14 a23 */
    std::uint32_t a12 = rng.field_element(f), a13 = rng.field_element(f),
                  a14 = rng.field_element(f), a23 = rng.field_element(f),
                  a24 = rng.field_element(f), a34 = rng.field_element(f);
    FieldMatrix m(f, 4, 4);
    auto put = [&](int i, int j, std::uint32_t v) {
      m.set(i, j, v);
      m.set(j, i, f.neg(v));
    };
    put(0, 1, a12); put(0, 2, a13); put(0, 3, a14);
    put(1, 2, a23); put(1, 3, a24); put(2, 3, a34);
    std::uint32_t expect =
        f.add(f.sub(f.mul(a12, a34), f.mul(a13, a24)), f.mul(a14, a23));
    CHECK(pfaffian(m) == expect);
    CHECK(f.mul(pfaffian(m), pfaffian(m)) == m.determinant());
  }

  /* block-diagonal symplectic 6x6 has pfaffian 1 */
  FieldMatrix s(f, 6, 6);
  for (int b = 0; b < 3; ++b) {
    s.set(2 * b, 2 * b + 1, 1);
    s.set(2 * b + 1, 2 * b, f.neg(1));
  }
  CHECK(pfaffian(s) == 1);
}

TEST_CASE("pfaffian squared equals determinant for random skew sizes 2,4,6") {
  PrimeField f(101);
  Rng rng(8);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 2 + 2 * rng.below(3);
    FieldMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        std::uint32_t v = rng.field_element(f);
        m.set(i, j, v);
        m.set(j, i, f.neg(v));
      }
    CHECK(f.mul(pfaffian(m), pfaffian(m)) == m.determinant());
  }
}

TEST_CASE("sub-pfaffians of the rank-6 normal form") {
  PrimeField f(31);
  FieldMatrix m(f, 7, 7);
  for (int b = 0; b < 3; ++b) {
    m.set(2 * b, 2 * b + 1, 1);
    m.set(2 * b + 1, 2 * b, f.neg(1));
  }
  auto sp = sub_pfaffians(m);
  for (int i = 0; i < 6; ++i) CHECK(sp[i] == 0);
  CHECK(sp[6] == 1);  // deleting the kernel direction leaves the symplectic block
}

TEST_CASE("form rank and kernel") {
  PrimeField f(31);
  /* rank-4 normal form x1^x2 + x3^x4 */
  std::array<std::uint32_t, kDimW2> c{};
  c[pair_index(0, 1)] = 1;
  c[pair_index(2, 3)] = 1;
  auto y = TwoForm::from_coords(f, c);
  auto [rk, ker] = form_rank_kernel(y);
  CHECK(rk == 4);
  CHECK(ker.dim() == 3);
  CHECK(ker == Subspace::row_space(FieldMatrix::from_rows(
                   f, {{0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 1}})));
}

TEST_CASE("plucker embedding of span(e1+e3, e2)") {
  PrimeField f(31);
  auto t = TwoPlane::from_rows(
      FieldMatrix::from_rows(f, {{1, 0, 1, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0}}));
  auto x = plucker_embed(t);
  for (int k = 0; k < kDimW2; ++k) {
    auto [i, j] = index_pair(k);
    if (i == 0 && j == 1) CHECK(x[k] == 1);
    else if (i == 1 && j == 2) CHECK(x[k] == f.neg(1));
    else CHECK(x[k] == 0);
  }
}

TEST_CASE("wedge square of e12 + e34 is twice e1234") {
  PrimeField f(31);
  std::array<std::uint32_t, kDimW2> c{};
  c[pair_index(0, 1)] = 1;
  c[pair_index(2, 3)] = 1;
  PluckerVector x(f, c);
  auto w = wedge_square(x);
  for (int n = 0; n < kDimW4; ++n) {
    if (n == quad_index(0, 1, 2, 3)) CHECK(w[n] == 2);
    else CHECK(w[n] == 0);
  }
}

TEST_CASE("plucker round trip on random planes") {
  PrimeField f(31);
  Rng rng(21);
  for (int t = 0; t < 1000; ++t) {
    FieldMatrix m = FieldMatrix::random(f, 2, kDimV, rng);
    if (m.rank() != 2) continue;
    TwoPlane p = TwoPlane::from_rows(m);
    PluckerVector x = plucker_embed(p);
    auto w2 = wedge_square(x);
    for (auto v : w2) CHECK(v == 0);
    CHECK(decompose_plucker(x) == p);
  }
}

TEST_CASE("decompose rejects non-decomposable input") {
  PrimeField f(31);
  std::array<std::uint32_t, kDimW2> c{};
  c[pair_index(0, 1)] = 1;
  c[pair_index(2, 3)] = 1;  // rank 4, not decomposable
  CHECK_THROWS_AS(decompose_plucker(PluckerVector(f, c)), InvariantError);
  std::array<std::uint32_t, kDimW2> z{};
  CHECK_THROWS_AS(decompose_plucker(PluckerVector(f, z)), InvariantError);
}

TEST_CASE("pair_eval matches t1^T Y t2 on embedded planes") {
  PrimeField f(101);
  Rng rng(33);
  for (int t = 0; t < 100; ++t) {
    FieldMatrix b = FieldMatrix::random(f, 2, kDimV, rng);
    if (b.rank() != 2) continue;
    std::array<std::uint32_t, kDimW2> c{};
    for (auto& v : c) v = rng.field_element(f);
    TwoForm y = TwoForm::from_coords(f, c);
    auto x = wedge(f, b.row(0), b.row(1));
    /* u^T Y v */
    auto yv = y.matrix().mul_vec(b.row(1));
    std::uint32_t direct = 0;
    for (int j = 0; j < kDimV; ++j) direct = f.add(direct, f.mul(b.at(0, j), yv[j]));
    CHECK(pair_eval(y, x) == direct);
  }
}

TEST_CASE("wedge2 of the annihilator of span(e5,e6,e7)") {
  PrimeField f(31);
  auto k = Subspace::row_space(FieldMatrix::from_rows(
      f, {{0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 1}}));
  auto ann = k.annihilator();
  CHECK(ann.dim() == 4);
  auto w2 = wedge2_subspace(ann);
  CHECK(w2.dim() == 6);
  /* exactly the unit coordinate vectors at pairs inside {1,2,3,4} */
  std::size_t row = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      for (int t = 0; t < kDimW2; ++t)
        CHECK(w2.basis().at(row, t) == (t == pair_index(i, j) ? 1u : 0u));
      ++row;
    }
}

TEST_CASE("wedge2 dimension is d choose 2") {
  PrimeField f(101);
  Rng rng(44);
  for (int t = 0; t < 20; ++t) {
    std::size_t d = 2 + rng.below(4);
    auto m = FieldMatrix::random(f, d, kDimV, rng);
    if (m.rank() != d) continue;
    auto s = Subspace::row_space(m);
    CHECK(wedge2_subspace(s).dim() == d * (d - 1) / 2);
  }
}
