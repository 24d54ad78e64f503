#include "gpdual/sampler.hpp"

#include <algorithm>
#include <set>

#include "gpdual/errors.hpp"
#include "gpdual/solve.hpp"

namespace gpdual {

namespace {

// rows i of the result: (A_i t1)^T where A_i is the i-th basis form of W;
// its kernel is exactly { t2 : w(t1, t2) = 0 for all w in W }.
FieldMatrix incidence_matrix(const Instance& inst,
                             std::span<const std::uint32_t> t1) {
  const PrimeField& f = inst.field;
  FieldMatrix n(f, kDimV, kDimV);
  for (std::size_t i = 0; i < kDimV; ++i) {
    TwoForm w = TwoForm::from_coords(f, inst.W.basis().row(i));
    std::vector<std::uint32_t> col = w.matrix().mul_vec(t1);
    for (std::size_t j = 0; j < kDimV; ++j) n.set(i, j, col[j]);
  }
  return n;
}

// first kernel row independent of t1, if any
std::optional<TwoPlane> complete_to_plane(const PrimeField& f,
                                          const FieldMatrix& kernel,
                                          std::span<const std::uint32_t> t1) {
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    FieldMatrix cand(f, 0, kDimV);
    cand.append_row(t1);
    cand.append_row(kernel.row(r));
    if (cand.rank() == 2) return TwoPlane::from_rows(cand);
  }
  return std::nullopt;
}

std::array<std::uint32_t, kDimW2> plane_key(const TwoPlane& t) {
  return plucker_embed(t).normalized().coords();
}

}  // namespace

TwoForm normalize_form(const TwoForm& y) {
  auto c = y.coords();
  for (auto v : c)
    if (v) {
      FieldMatrix m = y.matrix();
      std::uint32_t s = y.field().inv(v);
      for (std::size_t i = 0; i < kDimV; ++i)
        for (std::size_t j = 0; j < kDimV; ++j)
          m.set(i, j, y.field().mul(m.at(i, j), s));
      return TwoForm::from_matrix(std::move(m));
    }
  return y;
}

std::vector<TwoPlane> sample_x_planes(const Instance& inst, Rng& rng,
                                      std::size_t count, std::size_t max_draws,
                                      SampleStats* stats) {
  const PrimeField& f = inst.field;
  SampleStats local;
  std::vector<TwoPlane> out;
  std::set<std::array<std::uint32_t, kDimW2>> seen;

  while (out.size() < count && local.draws < max_draws) {
    ++local.draws;
    std::vector<std::uint32_t> t1(kDimV);
    bool any = false;
    for (auto& v : t1) {
      v = rng.field_element(f);
      any = any || v;
    }
    if (!any) continue;

    FieldMatrix ker = incidence_matrix(inst, t1).kernel();
    if (ker.rows() < 2) continue;
    auto plane = complete_to_plane(f, ker, t1);
    if (!plane) continue;
    ++local.hits;
    if (seen.insert(plane_key(*plane)).second) out.push_back(*plane);
  }
  if (stats) *stats = local;
  return out;
}

namespace {

// all points of Y on a random codimension-3 linear slice, via chart-by-chart
// zero-dimensional solving
std::vector<TwoForm> slice_y_once(const Instance& inst, Rng& rng,
                                  SampleStats& stats,
                                  const BuchbergerOptions& gb_opts) {
  const PrimeField& f = inst.field;
  Ring r7 = section_ring(f, 7);
  std::vector<SparsePolynomial> gens = section_y_ideal(inst, r7);
  for (int j = 0; j < 3; ++j) {
    std::vector<Term> ts;
    while (ts.empty())
      for (int k = 0; k < 7; ++k)
        if (std::uint32_t c = rng.field_element(f))
          ts.push_back({Monomial::var(7, k), c});
    gens.push_back(SparsePolynomial::from_terms(r7, std::move(ts)));
  }

  std::vector<TwoForm> found;
  for (int chart = 0; chart < 7; ++chart) {
    // coordinates u_j = 0 for j < chart, u_chart = 1
    const int rest = 7 - chart - 1;
    std::vector<std::vector<std::uint32_t>> affine_pts;
    if (rest == 0) {
      std::vector<std::uint32_t> pt(7, 0);
      pt[chart] = 1;
      bool on = true;
      for (const auto& g : gens)
        if (g.evaluate(pt)) { on = false; break; }
      if (on) affine_pts.push_back({});
    } else {
      FieldMatrix map(f, 7, rest + 1);
      map.set(chart, 0, 1);  // the chart variable, dehomogenized next
      for (int j = chart + 1; j < 7; ++j) map.set(j, j - chart, 1);
      Ring rcone = section_ring(f, rest + 1);
      Ring raff = section_ring(f, rest);
      std::vector<SparsePolynomial> affine;
      for (const auto& g : gens) {
        SparsePolynomial h =
            g.substitute_linear(map, rcone).dehomogenize(0, raff);
        if (!h.is_zero()) affine.push_back(std::move(h));
      }
      try {
        GroebnerBasis gb = buchberger(affine, gb_opts);
        Rng solver_rng(derive_seed(rng.next(), "slice-solver"));
        affine_pts = zero_dim_points(gb, solver_rng);
      } catch (const InvariantError&) {
        continue;  // degenerate slice; the caller will draw a fresh one
      }
    }

    for (const auto& a : affine_pts) {
      std::vector<std::uint32_t> u(7, 0);
      u[chart] = 1;
      for (int j = 0; j < rest; ++j) u[chart + 1 + j] = a[j];
      TwoForm y = TwoForm::from_span(f, inst.W.basis(), u);
      auto [rank, ker] = form_rank_kernel(y);
      if (rank == 2) {
        ++stats.rank2_rejections;
        continue;
      }
      if (rank == 4) found.push_back(normalize_form(y));
    }
  }
  ++stats.slice_rounds;
  return found;
}

}  // namespace

std::vector<TwoForm> sample_y_forms(const Instance& inst, Rng& rng,
                                    std::size_t count, std::size_t max_draws,
                                    SampleStats* stats,
                                    const BuchbergerOptions& gb_opts) {
  const PrimeField& f = inst.field;
  SampleStats local;
  std::vector<TwoForm> out;
  std::set<std::array<std::uint32_t, kDimW2>> seen;
  auto add = [&](const TwoForm& y) {
    if (seen.insert(normalize_form(y).coords()).second)
      out.push_back(normalize_form(y));
  };

  while (out.size() < count && local.draws < max_draws) {
    ++local.draws;
    std::vector<std::uint32_t> u(kDimV);
    bool any = false;
    for (auto& v : u) {
      v = rng.field_element(f);
      any = any || v;
    }
    if (!any) continue;
    TwoForm y = TwoForm::from_span(f, inst.W.basis(), u);
    auto [rank, ker] = form_rank_kernel(y);
    if (rank == 2) {
      ++local.rank2_rejections;
      continue;
    }
    if (rank == 4) {
      ++local.hits;
      add(y);
    }
  }

  int stuck_rounds = 0;
  while (out.size() < count && stuck_rounds < 8) {
    std::size_t before = out.size();
    for (const TwoForm& y : slice_y_once(inst, rng, local, gb_opts)) {
      ++local.hits;
      add(y);
      if (out.size() >= count) break;
    }
    stuck_rounds = out.size() == before ? stuck_rounds + 1 : 0;
  }
  if (out.size() < count)
    throw BudgetError("sample_y_forms: sampling budget exhausted");
  if (stats) *stats = local;
  return out;
}

std::vector<PluckerVector> curve_points(const Instance& inst, const TwoForm& y) {
  const PrimeField& f = inst.field;
  auto [rank, ker] = form_rank_kernel(y);
  if (rank != 4 || ker.dim() != 3)
    throw InvariantError("curve_points: the form must have rank 4");

  const std::uint32_t p = f.modulus();
  std::set<std::array<std::uint32_t, kDimW2>> seen;

  // projective representatives (1,a,b), (0,1,a), (0,0,1) over the K basis
  std::vector<std::array<std::uint32_t, 3>> reps;
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b) reps.push_back({1, a, b});
  for (std::uint32_t a = 0; a < p; ++a) reps.push_back({0, 1, a});
  reps.push_back({0, 0, 1});

  for (const auto& c : reps) {
    std::vector<std::uint32_t> t1(kDimV, 0);
    for (int r = 0; r < 3; ++r)
      for (int j = 0; j < kDimV; ++j)
        t1[j] = f.add(t1[j], f.mul(c[r], ker.basis().at(r, j)));

    FieldMatrix kn = incidence_matrix(inst, t1).kernel();
    if (kn.rows() < 2) continue;

    // every line of ker N(t1) besides t1 itself completes t1 to a curve point
    std::vector<std::vector<std::uint32_t>> lines;
    const std::size_t m = kn.rows();
    std::vector<std::uint32_t> coeff(m, 0);
    for (std::size_t lead = 0; lead < m; ++lead) {
      // representatives with coeff[lead] = 1, zeros before
      std::fill(coeff.begin(), coeff.end(), 0);
      coeff[lead] = 1;
      for (;;) {
        std::vector<std::uint32_t> t2(kDimV, 0);
        for (std::size_t r = lead; r < m; ++r)
          for (int j = 0; j < kDimV; ++j)
            t2[j] = f.add(t2[j], f.mul(coeff[r], kn.at(r, j)));
        lines.push_back(std::move(t2));
        std::size_t i = lead + 1;
        while (i < m && ++coeff[i] == p) coeff[i++] = 0;
        if (i == m) break;
      }
    }
    for (const auto& t2 : lines) {
      FieldMatrix cand(f, 0, kDimV);
      cand.append_row(t1);
      cand.append_row(t2);
      if (cand.rank() != 2) continue;
      PluckerVector x = plucker_embed(TwoPlane::from_rows(cand)).normalized();
      seen.insert(x.coords());
    }
  }

  std::vector<PluckerVector> out;
  for (const auto& c : seen) out.emplace_back(f, c);
  return out;
}

}  // namespace gpdual
