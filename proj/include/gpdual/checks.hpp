#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "gpdual/sampler.hpp"
#include "gpdual/varieties.hpp"

namespace gpdual {

// One verified claim.  `anchor` restates the mathematical assertion the
// verdict refers to; `witnesses` holds counterexample data on failure or the
// reason when a check is skipped; `counters` make the search effort visible.
struct CheckReport {
  std::string claim_id;
  std::string anchor;
  std::string verdict;  // "pass" | "fail" | "skipped"
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
  nlohmann::ordered_json counters = nlohmann::ordered_json::object();
  std::int64_t elapsed_ms = 0;

  bool passed() const { return verdict == "pass"; }
};

nlohmann::ordered_json report_to_json(const CheckReport& r);

struct CheckOptions {
  std::size_t trials = 200;   // randomized equivalence trials per claim
  std::size_t samples = 30;   // variety points sampled per side
  std::int64_t gb_budget_ms = 0;  // wall-clock cap per basis computation
  bool deep = false;          // add the global singular-locus certificate
  std::uint64_t seed = 1;     // all per-claim randomness derives from this
};

/* --- granular criteria the claim runners aggregate (unit-testable) --- */

// the hyperplane cut by w is tangent at the plane t: all ten directional
// derivatives vanish along with the value
bool hyperplane_tangent_differential(const TwoForm& w, const TwoPlane& t);
// ...equivalently: t lies inside the kernel of w
bool hyperplane_tangent_geometric(const TwoForm& w, const TwoPlane& t);

// rank of the restricted quadric Jacobian at a point of X, given as a plane
std::size_t x_jacobian_rank(const Instance& inst, const TwoPlane& t);
// dim { w in W : the plane lies inside Ker w } — the smoothness obstruction
std::size_t x_obstruction_dim(const Instance& inst, const TwoPlane& t);

// rank of the restricted cubic Jacobian at a point of Y
std::size_t y_jacobian_rank(const Instance& inst, const TwoForm& y);
// dim ( Lambda^2(Ker y) ∩ M ) — the smoothness obstruction on the dual side
std::size_t y_obstruction_dim(const Instance& inst, const TwoForm& y);

/* --- claim runners --- */

CheckReport check_tangency(const Instance& inst, const CheckOptions& opts);
CheckReport check_pf_tangent(const Instance& inst, const CheckOptions& opts);
CheckReport check_schubert(const Instance& inst, const CheckOptions& opts);
CheckReport check_chart(const Instance& inst, const CheckOptions& opts);
CheckReport check_smoothness(const Instance& inst, const CheckOptions& opts);
CheckReport check_instance(const Instance& inst, const CheckOptions& opts);
CheckReport check_curves(const Instance& inst, const CheckOptions& opts);
CheckReport check_degrees(const Instance& inst, const CheckOptions& opts);

// ids in canonical order: tangency, pf-tangent, schubert, chart, smoothness,
// instance, curves, degrees
const std::vector<std::string>& all_claim_ids();

// Run the selected claims (all of them if `ids` is empty); unknown ids throw
// InvariantError.  Budget overruns inside a claim downgrade it to "skipped"
// with the reason recorded, never to a silent pass.
std::vector<CheckReport> run_checks(const Instance& inst,
                                    const std::vector<std::string>& ids,
                                    const CheckOptions& opts);

}  // namespace gpdual
