// Command-line front end: generate instances, run the claim checks, and emit
// JSON reports plus a human-readable summary.
//
// Subcommands
//   gen      write an instance (dual subspace pair, optionally with planted
//            singular witnesses) as JSON
//   verify   run selected checks against an instance file or a fresh seed
//   degrees  dimension/degree checks only
//   curve    curve-family checks only
//   sample   dump sampled points of both sections
//
// Exit codes: 0 = every claim passed or was skipped with a reason,
//             1 = at least one claim failed,
//             2 = usage or input error (message names the offending field).
//
// Report files are byte-identical for identical (binary, argv): the per-claim
// wall-clock times are deliberately zeroed in the JSON artifact and shown only
// in the stderr summary.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gpdual/checks.hpp"
#include "gpdual/errors.hpp"
#include "gpdual/exterior.hpp"
#include "gpdual/sampler.hpp"
#include "gpdual/varieties.hpp"
#include "json.hpp"

namespace {

using gpdual::CheckOptions;
using gpdual::CheckReport;
using gpdual::Instance;
using nlohmann::ordered_json;

struct Options {
  std::string instance_path;
  std::string out_path;
  std::uint64_t seed = 1;
  std::uint32_t prime = 31;
  bool singular = false;
  std::vector<std::string> checks;
  std::uint64_t trials = 200;
  std::uint64_t samples = 30;
  std::uint32_t gb_budget_secs = 0;  // 0 = no cap
  bool deep = false;
};

// Writes to `-o` when given, else to stdout.  The artifact is always the
// plain JSON document; chatter goes to stderr.
void emit(const ordered_json& doc, const std::string& out_path) {
  std::string text = doc.dump(2);
  text.push_back('\n');
  if (out_path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw gpdual::InvariantError("cannot open output file '" + out_path + "'");
  out << text;
  if (!out) throw gpdual::InvariantError("cannot write output file '" + out_path + "'");
}

Instance load_or_generate(const Options& o) {
  if (!o.instance_path.empty()) {
    std::ifstream in(o.instance_path, std::ios::binary);
    if (!in) throw gpdual::InvariantError("cannot open instance file '" + o.instance_path + "'");
    ordered_json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw gpdual::InvariantError("instance file '" + o.instance_path +
                                   "' is not valid JSON: " + e.what());
    }
    return gpdual::instance_from_json(j);
  }
  return o.singular ? gpdual::engineered_singular_instance(o.seed, o.prime)
                    : gpdual::random_instance(o.seed, o.prime);
}

ordered_json instance_header(const Instance& inst) {
  ordered_json j;
  j["hash"] = gpdual::instance_hash(inst);
  j["p"] = inst.field.modulus();
  j["seed"] = inst.seed;
  j["provenance"] = inst.provenance;
  return j;
}

CheckOptions check_options(const Options& o) {
  CheckOptions c;
  c.trials = o.trials;
  c.samples = o.samples;
  c.gb_budget_ms = static_cast<std::uint64_t>(o.gb_budget_secs) * 1000;
  c.deep = o.deep;
  c.seed = o.seed;
  return c;
}

// Shared runner for verify / degrees / curve.  `forced` overrides the check
// selection for the single-purpose subcommands.
int run_verify(const Options& o, const std::vector<std::string>& forced) {
  Instance inst = load_or_generate(o);
  const std::vector<std::string>& ids = forced.empty() ? o.checks : forced;
  CheckOptions copts = check_options(o);
  std::vector<CheckReport> reports = gpdual::run_checks(inst, ids, copts);

  // Assembly is order-independent: claims are sorted by id in the artifact.
  std::sort(reports.begin(), reports.end(),
            [](const CheckReport& a, const CheckReport& b) { return a.claim_id < b.claim_id; });

  ordered_json doc;
  doc["format"] = "gpdual-report-v1";
  doc["instance"] = instance_header(inst);
  ordered_json run;
  run["checks"] = ids.empty() ? gpdual::all_claim_ids() : ids;
  run["trials"] = copts.trials;
  run["samples"] = copts.samples;
  run["gb_budget_ms"] = copts.gb_budget_ms;
  run["deep"] = copts.deep;
  run["rng_seed"] = copts.seed;
  doc["options"] = std::move(run);

  std::size_t npass = 0, nfail = 0, nskip = 0;
  ordered_json claims = ordered_json::array();
  std::fprintf(stderr, "instance p=%u seed=%llu provenance=%s\n", inst.field.modulus(),
               static_cast<unsigned long long>(inst.seed), inst.provenance.c_str());
  for (const CheckReport& r : reports) {
    if (r.verdict == "pass") ++npass;
    else if (r.verdict == "fail") ++nfail;
    else ++nskip;
    std::fprintf(stderr, "[%-7s] %-11s %6llu ms\n", r.verdict.c_str(), r.claim_id.c_str(),
                 static_cast<unsigned long long>(r.elapsed_ms));
    ordered_json rj = gpdual::report_to_json(r);
    rj["elapsed_ms"] = 0;  // keep the artifact reproducible byte for byte
    claims.push_back(std::move(rj));
  }
  doc["claims"] = std::move(claims);
  ordered_json totals;
  totals["pass"] = npass;
  totals["fail"] = nfail;
  totals["skipped"] = nskip;
  doc["totals"] = std::move(totals);

  emit(doc, o.out_path);
  std::fprintf(stderr, "%zu passed, %zu failed, %zu skipped\n", npass, nfail, nskip);
  return nfail == 0 ? 0 : 1;
}

int run_gen(const Options& o) {
  Instance inst = o.singular ? gpdual::engineered_singular_instance(o.seed, o.prime)
                             : gpdual::random_instance(o.seed, o.prime);
  emit(gpdual::instance_to_json(inst), o.out_path);
  std::fprintf(stderr, "instance p=%u seed=%llu provenance=%s hash=%llu\n", inst.field.modulus(),
               static_cast<unsigned long long>(inst.seed), inst.provenance.c_str(),
               static_cast<unsigned long long>(gpdual::instance_hash(inst)));
  return 0;
}

int run_sample(const Options& o) {
  Instance inst = load_or_generate(o);
  gpdual::SampleStats xstats, ystats;
  gpdual::Rng xrng(gpdual::derive_seed(o.seed, "cli-sample-x"));
  gpdual::Rng yrng(gpdual::derive_seed(o.seed, "cli-sample-y"));
  std::size_t count = static_cast<std::size_t>(o.samples);
  auto planes = gpdual::sample_x_planes(inst, xrng, count, 400000 * count, &xstats);
  auto forms = gpdual::sample_y_forms(inst, yrng, count, 200000 * count, &ystats);

  ordered_json doc;
  doc["format"] = "gpdual-sample-v1";
  doc["instance"] = instance_header(inst);
  ordered_json xs = ordered_json::array();
  for (const auto& t : planes) {
    ordered_json row = ordered_json::array();
    gpdual::PluckerVector x = gpdual::plucker_embed(t).normalized();
    for (int k = 0; k < gpdual::kDimW2; ++k) row.push_back(x[k]);
    xs.push_back(std::move(row));
  }
  doc["x_points"] = std::move(xs);
  ordered_json ys = ordered_json::array();
  for (const auto& y : forms) {
    ordered_json row = ordered_json::array();
    auto coords = gpdual::normalize_form(y).coords();
    for (std::uint32_t c : coords) row.push_back(c);
    ys.push_back(std::move(row));
  }
  doc["y_forms"] = std::move(ys);
  ordered_json counters;
  counters["x_draws"] = xstats.draws;
  counters["x_slice_rounds"] = xstats.slice_rounds;
  counters["y_draws"] = ystats.draws;
  counters["y_rank2_rejections"] = ystats.rank2_rejections;
  doc["counters"] = std::move(counters);
  emit(doc, o.out_path);
  std::fprintf(stderr, "%zu plane samples, %zu form samples\n", planes.size(), forms.size());
  return 0;
}

void add_generation_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "instance / check RNG seed")->capture_default_str();
  cmd->add_option("--prime", o.prime, "field characteristic (odd prime > 7)")
      ->capture_default_str();
}

void add_output_flag(CLI::App* cmd, Options& o) {
  cmd->add_option("-o,--output", o.out_path, "write the JSON artifact here instead of stdout");
}

void add_instance_arg(CLI::App* cmd, Options& o) {
  cmd->add_option("instance", o.instance_path,
                  "instance JSON file (omit to generate one from --seed/--prime)")
      ->check(CLI::ExistingFile);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact dual linear sections workbench"};
  app.require_subcommand(1);
  Options o;

  CLI::App* gen = app.add_subcommand("gen", "generate an instance and write it as JSON");
  add_generation_flags(gen, o);
  gen->add_flag("--singular", o.singular, "plant mutually witnessing singular points");
  add_output_flag(gen, o);

  CLI::App* verify = app.add_subcommand("verify", "run checks and write a report");
  add_instance_arg(verify, o);
  add_generation_flags(verify, o);
  verify->add_flag("--singular", o.singular, "generate the fresh instance with planted witnesses");
  verify->add_option("--checks", o.checks, "comma-separated claim ids (default: all)")
      ->delimiter(',');
  verify->add_option("--trials", o.trials, "randomized trials per criterion")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--samples", o.samples, "point samples per section")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--gb-budget-secs", o.gb_budget_secs,
                     "basis computation budget in seconds (0 = no cap)")
      ->capture_default_str();
  verify->add_flag("--deep", o.deep, "also attempt the global singular-locus certificate");
  add_output_flag(verify, o);

  CLI::App* degrees = app.add_subcommand("degrees", "dimension/degree checks only");
  add_instance_arg(degrees, o);
  add_generation_flags(degrees, o);
  degrees->add_option("--gb-budget-secs", o.gb_budget_secs,
                      "basis computation budget in seconds (0 = no cap)")
      ->capture_default_str();
  add_output_flag(degrees, o);

  CLI::App* curve = app.add_subcommand("curve", "curve-family checks only");
  add_instance_arg(curve, o);
  add_generation_flags(curve, o);
  curve->add_flag("--singular", o.singular, "generate the fresh instance with planted witnesses");
  curve->add_option("--samples", o.samples, "fiber count is derived from this")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output_flag(curve, o);

  CLI::App* sample = app.add_subcommand("sample", "dump sampled points of both sections");
  add_instance_arg(sample, o);
  add_generation_flags(sample, o);
  sample->add_option("--samples", o.samples, "points per section")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output_flag(sample, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version are not errors; bad usage is
  }

  try {
    if (gen->parsed()) return run_gen(o);
    if (verify->parsed()) return run_verify(o, {});
    if (degrees->parsed()) return run_verify(o, {"degrees"});
    if (curve->parsed()) return run_verify(o, {"curves"});
    if (sample->parsed()) return run_sample(o);
  } catch (const gpdual::InvariantError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
