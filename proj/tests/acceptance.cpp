// Acceptance gate: one binary that re-verifies every finitely checkable
// claim end to end, each criterion timed against a budget pinned below.
// Prints one PASS/FAIL line per criterion and exits nonzero if any failed.
//
// The expected constants (degrees 42 and 14, dimensions, the curve degree)
// are recomputed here from first principles — a Pieri ladder on Schubert
// classes and brute-force linear algebra — independently of the library
// code they gate.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gpdual/checks.hpp"
#include "gpdual/errors.hpp"
#include "gpdual/exterior.hpp"
#include "gpdual/fmatrix.hpp"
#include "gpdual/groebner.hpp"
#include "gpdual/hilbert.hpp"
#include "gpdual/rng.hpp"
#include "gpdual/sampler.hpp"
#include "gpdual/varieties.hpp"

namespace {

using namespace gpdual;

// --- pinned fixture -------------------------------------------------------

constexpr std::uint64_t kSeeds[] = {1, 2, 3};
constexpr std::uint32_t kPrimes[] = {31, 101};
constexpr std::uint64_t kEngineeredSeeds[] = {1, 2, 3};

// Degree of the curve cut from the plane section by one incidence cycle.
// Hand value: lattice paths (3,0) -> (5,5) in seven unit steps staying
// weakly below the diagonal = C(7,2) - C(7,1) = 14.  The ladder below
// recomputes it at startup and the run aborts if they ever disagree.
constexpr std::int64_t kCurveDegreePinned = 14;

// --- harness ---------------------------------------------------------------

int g_failures = 0;

template <typename F>
void criterion(int id, const char* what, std::int64_t budget_ms, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string note;
  bool ok = false;
  try {
    ok = body(note);
  } catch (const std::exception& e) {
    ok = false;
    note = e.what();
  }
  std::int64_t ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  if (ms > budget_ms) {
    ok = false;
    note += std::string(note.empty() ? "" : "; ") + "over budget";
  }
  std::printf("[%2d] %s  %-52s %7lld / %lld ms%s%s\n", id, ok ? "PASS" : "FAIL",
              what, static_cast<long long>(ms),
              static_cast<long long>(budget_ms), note.empty() ? "" : "  -- ",
              note.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

// --- independent oracles ----------------------------------------------------

// Coefficient of the top class after multiplying the Schubert class (a0,b0)
// of the 2-plane Grassmannian in 7-space by `steps` hyperplane classes.
std::int64_t pieri_ladder(int a0, int b0, int steps) {
  std::map<std::pair<int, int>, std::int64_t> cur;
  cur[{a0, b0}] = 1;
  for (int s = 0; s < steps; ++s) {
    std::map<std::pair<int, int>, std::int64_t> next;
    for (const auto& [ab, c] : cur) {
      if (ab.first < 5) next[{ab.first + 1, ab.second}] += c;
      if (ab.second < ab.first) next[{ab.first, ab.second + 1}] += c;
    }
    cur.swap(next);
  }
  auto it = cur.find({5, 5});
  return it == cur.end() ? 0 : it->second;
}

TwoPlane random_plane(const PrimeField& f, Rng& rng) {
  for (;;) {
    FieldMatrix m(f, 2, kDimV);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < kDimV; ++c) m.set(r, c, rng.field_element(f));
    if (m.rank() == 2) return TwoPlane::from_rows(m);
  }
}

// random plane inside the row space of `basis` (needs rank >= 2)
TwoPlane random_plane_inside(const Subspace& space, Rng& rng) {
  const PrimeField& f = space.field();
  for (;;) {
    FieldMatrix m(f, 2, space.ambient());
    for (std::size_t r = 0; r < 2; ++r) {
      std::vector<std::uint32_t> v(space.ambient(), 0);
      for (std::size_t k = 0; k < space.dim(); ++k) {
        std::uint32_t c = rng.field_element(f);
        for (std::size_t j = 0; j < space.ambient(); ++j)
          v[j] = f.add(v[j], f.mul(c, space.basis().at(k, j)));
      }
      for (std::size_t j = 0; j < space.ambient(); ++j) m.set(r, j, v[j]);
    }
    if (m.rank() == 2) return TwoPlane::from_rows(m);
  }
}

std::vector<std::uint32_t> random_vector_in(const Subspace& space, Rng& rng) {
  const PrimeField& f = space.field();
  for (;;) {
    std::vector<std::uint32_t> v(space.ambient(), 0);
    bool any = false;
    for (std::size_t k = 0; k < space.dim(); ++k) {
      std::uint32_t c = rng.field_element(f);
      any = any || c;
      for (std::size_t j = 0; j < space.ambient(); ++j)
        v[j] = f.add(v[j], f.mul(c, space.basis().at(k, j)));
    }
    if (any) return v;
  }
}

// --- shared fixture (filled while the criteria run) -------------------------

struct VerifiedInstance {
  Instance inst;
  std::vector<TwoPlane> xs;
  std::vector<TwoForm> ys;
};

std::vector<VerifiedInstance> g_verified;
std::vector<Instance> g_engineered;

}  // namespace

int main() {
  std::printf("acceptance: exact dual linear sections workbench\n");

  if (pieri_ladder(3, 0, 7) != kCurveDegreePinned) {
    std::printf("FATAL: Pieri ladder disagrees with the pinned curve degree\n");
    return 1;
  }
  const std::int64_t deg_plane_variety = pieri_ladder(0, 0, 10);  // 42

  for (std::uint32_t p : kPrimes)
    for (std::uint64_t s : kSeeds)
      g_verified.push_back({random_instance(s, p), {}, {}});
  for (std::uint64_t s : kEngineeredSeeds)
    g_engineered.push_back(engineered_singular_instance(s, 31));

  PrimeField f31(31);

  // 1. ambient plane variety: dimension 10, degree 42
  criterion(1, "plane variety has (dim, deg) = (10, 42)", 120000, [&](std::string& note) {
    Ring r21 = bivector_ring(f31);
    IdealAnalysis a = analyze_ideal(decomposable_quadrics(r21));
    note = "dim " + std::to_string(a.summary.proj_dim) + ", deg " +
           std::to_string(a.summary.degree) + ", ladder " +
           std::to_string(deg_plane_variety);
    return a.summary.proj_dim == 10 && a.summary.degree == 42 &&
           deg_plane_variety == 42;
  });

  // 2. ambient rank-4 variety: dimension 17, degree 14; the 0-dimensional
  //    slice fallback must independently reach degree 14 within 10 s
  criterion(2, "rank-4 variety has (dim, deg) = (17, 14)", 120000, [&](std::string& note) {
    Ring r21 = form_ring(f31);
    std::vector<SparsePolynomial> cubics = subpfaffian_cubics(r21);
    IdealAnalysis full = analyze_ideal(cubics);
    bool ok = full.summary.proj_dim == 17 && full.summary.degree == 14;

    auto t0 = std::chrono::steady_clock::now();
    Rng rng(derive_seed(2026, "acceptance-pf-slice"));
    FieldMatrix b(f31, 4, kDimW2);
    do {
      b = FieldMatrix::random(f31, 4, kDimW2, rng);
    } while (b.rank() != 4);
    IdealAnalysis slice = analyze_ideal(
        restrict_to_subspace(cubics, Subspace::row_space(b), section_ring(f31, 4)));
    std::int64_t slice_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - t0)
                                .count();
    bool slice_ok = slice.summary.proj_dim == 0 && slice.summary.degree == 14 &&
                    slice_ms <= 10000;
    note = "full (" + std::to_string(full.summary.proj_dim) + ", " +
           std::to_string(full.summary.degree) + "), slice deg " +
           std::to_string(slice.summary.degree) + " in " +
           std::to_string(slice_ms) + " ms";
    return ok && slice_ok;
  });

  // 3. both sections of every pinned instance: (3, 42) and (3, 14)
  criterion(3, "sections have (3, 42) and (3, 14) on all seeds", 3600000,
            [&](std::string& note) {
    for (VerifiedInstance& v : g_verified) {
      auto t0 = std::chrono::steady_clock::now();
      const PrimeField& f = v.inst.field;
      IdealAnalysis ax = analyze_ideal(section_x_ideal(v.inst, section_ring(f, 14)));
      IdealAnalysis ay = analyze_ideal(section_y_ideal(v.inst, section_ring(f, 7)));
      std::int64_t ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
      if (ax.summary.proj_dim != 3 || ax.summary.degree != 42 ||
          ay.summary.proj_dim != 3 || ay.summary.degree != 14 || ms > 600000) {
        note = "p=" + std::to_string(f.modulus()) + " seed=" +
               std::to_string(v.inst.seed) + ": (" +
               std::to_string(ax.summary.proj_dim) + ", " +
               std::to_string(ax.summary.degree) + ") / (" +
               std::to_string(ay.summary.proj_dim) + ", " +
               std::to_string(ay.summary.degree) + ") in " +
               std::to_string(ms) + " ms";
        return false;
      }
    }
    note = std::to_string(g_verified.size()) + " instances";
    return true;
  });

  // 4. hyperplane tangency: derivative test == kernel containment, 100 pairs
  //    per seed per prime, within 5 s per seed
  criterion(4, "tangency criterion agrees on 100 pairs per seed", 30000,
            [&](std::string& note) {
    std::size_t tangent = 0, transverse = 0;
    for (std::uint32_t p : kPrimes) {
      PrimeField f(p);
      for (std::uint64_t s : kSeeds) {
        auto t0 = std::chrono::steady_clock::now();
        Rng rng(derive_seed(s, "acceptance-tangency"));
        for (int i = 0; i < 100; ++i) {
          TwoForm y = transported_rank4_form(f, rng);
          Subspace K = form_rank_kernel(y).second;
          TwoPlane t = [&] {
            switch (i % 3) {
              case 0: return random_plane(f, rng);
              case 1: return random_plane_inside(K, rng);
              default: {
                std::vector<std::uint32_t> t1 = random_vector_in(K, rng);
                for (;;) {
                  TwoPlane cand = random_plane(f, rng);
                  FieldMatrix m(f, 0, kDimV);
                  m.append_row(t1);
                  m.append_row(cand.basis().row(1));
                  if (m.rank() == 2) return TwoPlane::from_rows(m);
                }
              }
            }
          }();
          bool differential = hyperplane_tangent_differential(y, t);
          bool geometric = K.contains(t.as_subspace());
          if (differential != geometric) {
            note = "disagreement at p=" + std::to_string(p) + " seed=" +
                   std::to_string(s) + " trial " + std::to_string(i);
            return false;
          }
          (geometric ? tangent : transverse) += 1;
        }
        std::int64_t ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
        if (ms > 5000) {
          note = "seed budget exceeded";
          return false;
        }
      }
    }
    note = std::to_string(tangent) + " tangent, " + std::to_string(transverse) +
           " transverse";
    return tangent >= 100 && transverse >= 100;
  });

  // 5. cubic Jacobian kernel at 50 rank-4 forms equals the annihilator of
  //    the wedge square of the kernel, dimension 18
  criterion(5, "rank-4 tangent space = kernel-wedge annihilator", 5000,
            [&](std::string& note) {
    Ring r21 = form_ring(f31);
    std::vector<SparsePolynomial> cubics = subpfaffian_cubics(r21);
    Rng rng(derive_seed(2026, "acceptance-pf-tangent"));
    for (int i = 0; i < 50; ++i) {
      TwoForm y = transported_rank4_form(f31, rng);
      auto coords = y.coords();
      FieldMatrix J = jacobian_at(cubics, std::vector<std::uint32_t>(
                                               coords.begin(), coords.end()));
      Subspace ker = Subspace::from_rref(J.kernel());
      Subspace expected =
          wedge2_subspace(form_rank_kernel(y).second).annihilator();
      if (ker.dim() != 18 || !ker.contains(expected) || !expected.contains(ker)) {
        note = "mismatch at trial " + std::to_string(i);
        return false;
      }
    }
    note = "50/50, dimension 18";
    return true;
  });

  // 6. incidence cycle membership: the six linear forms vanish exactly on
  //    planes meeting the 3-space, 200 mixed trials
  criterion(6, "cycle equations match membership on 200 trials", 2000,
            [&](std::string& note) {
    Ring r21 = bivector_ring(f31);
    Rng rng(derive_seed(2026, "acceptance-cycle"));
    std::size_t meets = 0, misses = 0;
    for (int i = 0; i < 200; ++i) {
      FieldMatrix kb(f31, 3, kDimV);
      do {
        kb = FieldMatrix::random(f31, 3, kDimV, rng);
      } while (kb.rank() != 3);
      Subspace K3 = Subspace::row_space(kb);
      std::vector<SparsePolynomial> forms = incidence_linear_forms(r21, K3);
      TwoPlane t = [&] {
        if (i % 2 == 0) return random_plane(f31, rng);
        std::vector<std::uint32_t> t1 = random_vector_in(K3, rng);
        for (;;) {
          TwoPlane cand = random_plane(f31, rng);
          FieldMatrix m(f31, 0, kDimV);
          m.append_row(t1);
          m.append_row(cand.basis().row(0));
          if (m.rank() == 2) return TwoPlane::from_rows(m);
        }
      }();
      FieldMatrix stacked(f31, 0, kDimV);
      for (std::size_t r = 0; r < 2; ++r) stacked.append_row(t.basis().row(r));
      for (std::size_t r = 0; r < 3; ++r) stacked.append_row(kb.row(r));
      bool member = stacked.rank() < 5;
      auto xc = plucker_embed(t).coords();
      std::vector<std::uint32_t> pt(xc.begin(), xc.end());
      bool vanishes = true;
      for (const auto& g : forms)
        if (g.evaluate(pt)) { vanishes = false; break; }
      if (member != vanishes) {
        note = "disagreement at trial " + std::to_string(i);
        return false;
      }
      (member ? meets : misses) += 1;
    }
    note = std::to_string(meets) + " meets, " + std::to_string(misses) + " misses";
    return meets >= 50 && misses >= 50;
  });

  // 7. local chart of the cycle: affine dimension 5 with Hilbert numerator
  //    1 - 6t^2 + 8t^3 - 3t^4
  criterion(7, "chart minors: affine dim 5, numerator (1,0,-6,8,-3)", 10000,
            [&](std::string& note) {
    IdealAnalysis a = analyze_ideal(incidence_chart_minors(section_ring(f31, 8)));
    note = "proj dim " + std::to_string(a.summary.proj_dim);
    return a.summary.proj_dim == 4 &&
           a.series.numerator == IntPoly{{1, 0, -6, 8, -3}};
  });

  // 8. pointwise smoothness, both routes, plus three planted-singular
  //    instances whose witnesses are flagged by both routes
  criterion(8, "Jacobian verdict == incidence verdict at every point", 300000,
            [&](std::string& note) {
    std::size_t xtotal = 0, ytotal = 0;
    for (VerifiedInstance& v : g_verified) {
      Rng xrng(derive_seed(v.inst.seed, "acceptance-x-points"));
      Rng yrng(derive_seed(v.inst.seed, "acceptance-y-points"));
      v.xs = sample_x_planes(v.inst, xrng, 30, 4000000);
      v.ys = sample_y_forms(v.inst, yrng, 10, 300000);
      for (const TwoPlane& t : v.xs) {
        bool smooth_jac = x_jacobian_rank(v.inst, t) == 10;
        bool smooth_inc = x_obstruction_dim(v.inst, t) == 0;
        if (smooth_jac != smooth_inc) {
          note = "X routes disagree (seed " + std::to_string(v.inst.seed) + ")";
          return false;
        }
      }
      for (const TwoForm& y : v.ys) {
        bool smooth_jac = y_jacobian_rank(v.inst, y) == 3;
        bool smooth_inc = y_obstruction_dim(v.inst, y) == 0;
        if (smooth_jac != smooth_inc) {
          note = "Y routes disagree (seed " + std::to_string(v.inst.seed) + ")";
          return false;
        }
      }
      xtotal += v.xs.size();
      ytotal += v.ys.size();
    }
    for (const Instance& inst : g_engineered) {
      TwoPlane tx = decompose_plucker(*inst.witness_x);
      bool x_flagged = x_jacobian_rank(inst, tx) < 10 &&
                       x_obstruction_dim(inst, tx) >= 1;
      bool y_flagged = y_jacobian_rank(inst, *inst.witness_y) < 3 &&
                       y_obstruction_dim(inst, *inst.witness_y) >= 1;
      if (!x_flagged || !y_flagged) {
        note = "planted witness not flagged (seed " +
               std::to_string(inst.seed) + ")";
        return false;
      }
    }
    note = std::to_string(xtotal) + " X-points, " + std::to_string(ytotal) +
           " Y-points, " + std::to_string(g_engineered.size()) +
           " planted instances";
    return xtotal >= 100 && ytotal >= 10;
  });

  // 9. the forms vanishing on 30 sampled X-points are exactly W
  criterion(9, "evaluation kernel of 30 X-points equals W", 60000,
            [&](std::string& note) {
    for (const VerifiedInstance& v : g_verified) {
      if (v.xs.size() < 30) {
        note = "not enough X-points (seed " + std::to_string(v.inst.seed) + ")";
        return false;
      }
      FieldMatrix pts(v.inst.field, 0, kDimW2);
      for (const TwoPlane& t : v.xs)
        pts.append_row(plucker_embed(t).normalized().coords());
      Subspace ann = Subspace::row_space(pts).annihilator();
      if (ann.dim() != 7 || !ann.contains(v.inst.W) || !v.inst.W.contains(ann)) {
        note = "kernel != W (seed " + std::to_string(v.inst.seed) + ")";
        return false;
      }
    }
    note = std::to_string(g_verified.size()) + " instances, dimension 7 twice contained";
    return true;
  });

  // 10. sampled Y-points have pairwise distinct kernels
  criterion(10, "sampled Y-point kernels are pairwise distinct", 10000,
             [&](std::string& note) {
    std::size_t total = 0;
    for (const VerifiedInstance& v : g_verified) {
      std::set<std::vector<std::uint32_t>> seen;
      for (const TwoForm& y : v.ys) {
        const FieldMatrix& kb = form_rank_kernel(y).second.basis();
        std::vector<std::uint32_t> key;
        for (std::size_t r = 0; r < kb.rows(); ++r)
          for (std::size_t c = 0; c < kb.cols(); ++c) key.push_back(kb.at(r, c));
        if (!seen.insert(std::move(key)).second) {
          note = "repeated kernel (seed " + std::to_string(v.inst.seed) + ")";
          return false;
        }
      }
      total += v.ys.size();
    }
    note = std::to_string(total) + " kernels distinct";
    return true;
  });

  // 11. the curves over three Y-points per instance: dimension 1 and one
  //     shared Hilbert polynomial whose degree matches the Pieri ladder
  criterion(11, "curve fibers share one Hilbert polynomial, degree 14", 300000,
             [&](std::string& note) {
    std::size_t fibers = 0;
    for (const VerifiedInstance& v : g_verified) {
      if (v.ys.size() < 3) {
        note = "not enough Y-points (seed " + std::to_string(v.inst.seed) + ")";
        return false;
      }
      Ring r14 = section_ring(v.inst.field, 14);
      HilbertSummary first;
      for (std::size_t k = 0; k < 3; ++k) {
        IdealAnalysis a = analyze_ideal(curve_ideal(v.inst, v.ys[k], r14));
        if (a.summary.proj_dim != 1 ||
            a.summary.degree != kCurveDegreePinned ||
            a.summary.degree != pieri_ladder(3, 0, 7)) {
          note = "fiber (" + std::to_string(a.summary.proj_dim) + ", " +
                 std::to_string(a.summary.degree) + ") at seed " +
                 std::to_string(v.inst.seed);
          return false;
        }
        if (k == 0) first = a.summary;
        else if (!first.same_polynomial(a.summary)) {
          note = "fiber polynomials differ at seed " + std::to_string(v.inst.seed);
          return false;
        }
        ++fibers;
      }
    }
    note = std::to_string(fibers) + " fibers, shared polynomial 14d - 5";
    return true;
  });

  // 12. kernel property suite: squared Pfaffian, embedding round trip,
  //     emitted sample points re-verify against their ideals
  criterion(12, "Pfaffian/embedding/sampler property suite", 10000,
             [&](std::string& note) {
    Rng rng(derive_seed(2026, "acceptance-properties"));
    for (int i = 0; i < 1000; ++i) {
      std::size_t n = 2 * (1 + i % 3);  // 2, 4, 6
      FieldMatrix m(f31, n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c) {
          std::uint32_t e = rng.field_element(f31);
          m.set(r, c, e);
          m.set(c, r, f31.neg(e));
        }
      std::uint32_t pf = pfaffian(m);
      if (f31.mul(pf, pf) != m.determinant()) {
        note = "squared Pfaffian != determinant at trial " + std::to_string(i);
        return false;
      }
    }
    for (int i = 0; i < 1000; ++i) {
      TwoPlane t = random_plane(f31, rng);
      PluckerVector x = plucker_embed(t);
      for (auto q : wedge_square(x))
        if (q) {
          note = "embedded plane is not decomposable at trial " + std::to_string(i);
          return false;
        }
      if (!(decompose_plucker(x) == t)) {
        note = "embedding round trip failed at trial " + std::to_string(i);
        return false;
      }
    }
    Instance inst = random_instance(9, 31);
    Rng xrng(derive_seed(9, "acceptance-reverify-x"));
    Rng yrng(derive_seed(9, "acceptance-reverify-y"));
    for (const TwoPlane& t : sample_x_planes(inst, xrng, 10, 400000)) {
      PluckerVector x = plucker_embed(t);
      for (auto q : wedge_square(x))
        if (q) {
          note = "sampled X-point leaves the plane variety";
          return false;
        }
      if (!inst.M.contains(x.normalized().coords())) {
        note = "sampled X-point leaves M";
        return false;
      }
    }
    for (const TwoForm& y : sample_y_forms(inst, yrng, 5, 100000)) {
      for (auto s : sub_pfaffians(y.matrix()))
        if (s) {
          note = "sampled Y-point has rank above 4";
          return false;
        }
      if (!inst.W.contains(y.coords())) {
        note = "sampled Y-point leaves W";
        return false;
      }
    }
    note = "1000 Pfaffians, 1000 round trips, 15 samples re-verified";
    return true;
  });

  std::printf("acceptance: %d/12 criteria passed\n", 12 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
