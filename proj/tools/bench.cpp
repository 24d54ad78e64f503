// Timing harness for the Groebner workloads the checks depend on.
// Not part of the test suite; run manually, e.g. `bench g x y curve`.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "gpdual/checks.hpp"
#include "gpdual/hilbert.hpp"
#include "gpdual/varieties.hpp"

using namespace gpdual;

namespace {

void report(const char* name, const std::vector<SparsePolynomial>& gens) {
  auto t0 = std::chrono::steady_clock::now();
  IdealAnalysis ia = analyze_ideal(gens);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::string num;
  for (std::size_t i = 0; i < ia.summary.reduced_numerator.c.size(); ++i) {
    if (i) num += ",";
    num += std::to_string(ia.summary.reduced_numerator.c[i]);
  }
  std::printf(
      "%-8s %6lld ms  gb=%zu  elim=%d  projdim=%d  degree=%lld  h=[%s]\n",
      name, static_cast<long long>(ms), ia.gb.gens.size(), ia.eliminated_vars,
      ia.summary.proj_dim, static_cast<long long>(ia.summary.degree),
      num.c_str());
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> which(argv + 1, argv + argc);
  if (which.empty()) which = {"g", "pf", "x", "y", "curve"};
  PrimeField f(31);
  Instance inst = random_instance(1, 31);
  Ring r21 = bivector_ring(f);
  Ring r14 = section_ring(f, 14);
  Ring r7 = section_ring(f, 7);

  for (const auto& w : which) {
    if (w == "g") {
      report("G", decomposable_quadrics(r21));
    } else if (w == "pf") {
      report("Pf", subpfaffian_cubics(r21));
    } else if (w == "x") {
      report("X", section_x_ideal(inst, r14));
    } else if (w == "y") {
      report("Y", section_y_ideal(inst, r7));
    } else if (w == "cycle") {
      // y of rank 4 but outside W: X meets the incidence cycle in points
      Rng rng(derive_seed(inst.seed, "bench-cycle"));
      TwoForm y = transported_rank4_form(f, rng);
      report("cycle", curve_ideal(inst, y, r14));
    } else if (w == "curve") {
      // y inside W (a point of Y): the same cut is a curve
      Instance eng = engineered_singular_instance(1, 31);
      report("curve", curve_ideal(eng, *eng.witness_y, r14));
    } else if (w == "deep") {
      // global singular-locus certificate for Y
      CheckOptions opts;
      opts.deep = true;
      opts.samples = 4;
      auto t0 = std::chrono::steady_clock::now();
      CheckReport rep = check_smoothness(inst, opts);
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
      std::printf("deep     %6lld ms  verdict=%s  counters=%s\n",
                  static_cast<long long>(ms), rep.verdict.c_str(),
                  rep.counters.dump().c_str());
    } else if (w == "cert") {
      // standard-monomial profile of the singular-locus certificate ideal
      auto ygens = section_y_ideal(inst, r7);
      std::vector<std::vector<SparsePolynomial>> grad;
      for (const auto& g : ygens) {
        grad.emplace_back();
        for (int v = 0; v < 7; ++v) grad.back().push_back(g.derivative(v));
      }
      Rng rng(99);
      // one sextic per draw: det of (3x7) . J . (7x3) with random constants
      auto compressed_det = [&]() {
        std::vector<std::vector<SparsePolynomial>> rj;
        for (int a = 0; a < 3; ++a) {
          std::vector<SparsePolynomial> combo(7, SparsePolynomial::zero(r7));
          for (int i = 0; i < 7; ++i) {
            std::uint32_t c = rng.field_element(f);
            for (int j = 0; j < 7; ++j)
              combo[j] = combo[j] + grad[i][j].scaled(c);
          }
          rj.push_back(std::move(combo));
        }
        std::vector<std::vector<SparsePolynomial>> m(
            3, std::vector<SparsePolynomial>(3, SparsePolynomial::zero(r7)));
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b)
            for (int j = 0; j < 7; ++j)
              m[a][b] = m[a][b] + rj[a][j].scaled(rng.field_element(f));
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
      };
      for (int k : {14, 28}) {
        std::vector<SparsePolynomial> cert = ygens;
        for (int i = 0; i < k; ++i) {
          auto det = compressed_det();
          if (!det.is_zero()) cert.push_back(det);
        }
        for (int cap = 9; cap <= 10; cap += 1) {
          auto t0 = std::chrono::steady_clock::now();
          GroebnerBasis gb = buchberger(cert, BuchbergerOptions{0, cap});
          auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
          std::string prof;
          for (int d = 1; d <= cap; ++d)
            prof += std::to_string(standard_monomial_count(gb.leading_monomials(), 7, d)) + " ";
          std::printf("cert k=%-2d D=%-2d %6lld ms  gb=%zu  HF: %s\n", k, cap,
                      static_cast<long long>(ms), gb.gens.size(), prof.c_str());
          std::fflush(stdout);
        }
      }
    } else {
      std::fprintf(stderr, "unknown benchmark '%s'\n", w.c_str());
      return 2;
    }
  }
  return 0;
}
