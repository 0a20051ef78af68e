// Copyright 2026 The ghzbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// ghzbell search | verify | dedup

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ghzbell/catalog.hpp"
#include "ghzbell/equivalence.hpp"
#include "ghzbell/pipeline.hpp"
#include "ghzbell/record.hpp"

using namespace ghzbell;

namespace {

struct SearchFlags {
  std::string scenario;
  int trials = 100;
  std::uint64_t seed = 0;
  int restarts = 100;
  std::string out;
  std::int64_t max_denominator = 10000;
  bool serial = false;
};

int cmd_search(const SearchFlags& f) {
  PipelineConfig cfg;
  cfg.search.scenario = Scenario::parse(f.scenario);
  cfg.search.trials = f.trials;
  cfg.search.seed = f.seed;
  cfg.restarts = f.restarts;
  cfg.max_denominator = f.max_denominator;
  cfg.exec = f.serial ? Exec::serial : Exec::parallel;

  // Fail on an unwritable path before spending time on the search.
  std::ofstream out(f.out);
  if (!out) throw RecordError("cannot write " + f.out);

  const auto t0 = std::chrono::steady_clock::now();
  const SearchSummary sum = run_search(cfg);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  out << "# ghzbell search scenario=" << f.scenario << " seed=" << f.seed
      << " trials=" << f.trials << " restarts=" << f.restarts << '\n';
  for (const auto& r : sum.records) write_record(out, r);
  out.close();
  if (!out) throw RecordError("write failed for " + f.out);

  for (const auto& t : sum.trials) {
    if (!t.record) std::fprintf(stderr, "trial %llu: %s\n",
                                static_cast<unsigned long long>(t.trial), t.error.c_str());
  }
  std::printf("command     search\n");
  std::printf("scenario    %s\n", cfg.search.scenario.to_string().c_str());
  std::printf("seed        %llu\n", static_cast<unsigned long long>(f.seed));
  std::printf("trials      %d\n", f.trials);
  std::printf("restarts    %d\n", f.restarts);
  std::printf("output      %s\n", f.out.c_str());
  std::printf("seconds     %.2f\n", secs);
  std::printf("records     %zu\n", sum.records.size());
  std::printf("failures    %d\n", sum.failures);
  std::printf("hits        %d (v_crit < 0.5)\n", sum.hits);
  std::printf("hit_rate    %.4f\n", sum.hit_fraction());
  std::printf("best_v      %.9f\n", sum.records.empty() ? 1.0 : sum.best_v);
  std::printf("classes     %d\n", sum.classes);
  return 0;
}

struct VerifyFlags {
  std::string input;
  bool catalog = false;
  std::string only;
  int restarts = 100;
  std::uint64_t seed = 0;
  bool skip_general = false;
};

int cmd_verify(const VerifyFlags& f) {
  const std::string path = f.input.empty() ? GHZBELL_DEFAULT_CATALOG : f.input;
  std::vector<CatalogEntry> entries;
  for (const auto& r : load_records(path)) entries.push_back(entry_from_record(r));

  CertifyOptions opt;
  opt.restarts = f.restarts;
  opt.seed = f.seed;
  opt.run_general = !f.skip_general;

  int failed = 0, checked = 0;
  std::printf("%-14s %-6s %8s %8s %11s %11s %-5s %s\n", "label", "shape", "L", "L_pub", "v",
              "v_pub", "tight", "status");
  for (const auto& e : entries) {
    if (!f.only.empty() && e.label != f.only) continue;
    ++checked;
    const CertificationReport rep = certify_entry(e, opt);
    std::printf("%-14s %-6s %8lld %8lld %11.7f %11.7f %-5s %s\n", e.label.c_str(),
                e.tensor.scenario().to_string().c_str(), static_cast<long long>(rep.bound),
                static_cast<long long>(rep.published_bound), rep.v_crit, rep.published_v,
                rep.tight ? "yes" : "no", rep.ok() ? "ok" : "FAIL");
    for (const auto& msg : rep.failures) std::printf("    %s\n", msg.c_str());
    failed += !rep.ok();
  }
  if (!f.only.empty() && checked == 0) {
    std::fprintf(stderr, "no entry labelled %s\n", f.only.c_str());
    return 2;
  }
  if (f.only == "V_555^S1") {
    const CaseStudyReport cs = casestudy_s1(entries);
    std::printf("case study: expansion %s, Q = %.6f at phi2 = %.6f, v = %.7f\n",
                cs.expansion_matches ? "matches" : "differs", cs.q_max, cs.phi2_argmax,
                cs.v_crit);
    std::printf("case study: printed closed form at 3.73842 gives %.4f\n", cs.printed_formula);
    for (const auto& msg : cs.failures) std::printf("    %s\n", msg.c_str());
    failed += !cs.ok();
  }
  std::printf("%d checked, %d failed\n", checked, failed);
  return failed == 0 ? 0 : 1;
}

int cmd_dedup(const std::string& input, const std::string& output) {
  const auto records = load_records(input);
  std::vector<InequalityRecord> reps;
  std::vector<int> counts;
  std::map<std::string, std::size_t> slot;
  for (const auto& r : records) {
    const std::string d = canonicalize(r.tensor).digest;
    auto [it, fresh] = slot.try_emplace(d, reps.size());
    if (fresh) {
      reps.push_back(r);
      reps.back().digest = d;
      counts.push_back(0);
    }
    ++counts[it->second];
  }
  for (std::size_t n = 0; n < reps.size(); ++n) {
    auto& p = reps[n].provenance;
    p += (p.empty() ? "" : " ");
    p += "multiplicity=" + std::to_string(counts[n]);
  }
  if (output.empty() || output == "-") {
    for (const auto& r : reps) write_record(std::cout, r);
  } else {
    save_records(output, reps);
  }
  std::fprintf(stderr, "%zu records, %zu classes\n", records.size(), reps.size());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Search for and certify tight three-party Bell inequalities"};
  app.require_subcommand(1);

  SearchFlags sf;
  auto* search = app.add_subcommand("search", "run the descent + facet pipeline");
  search->add_option("--scenario", sf.scenario, "settings per party, e.g. 4x4x4")->required();
  search->add_option("--trials", sf.trials, "random starting profiles")->capture_default_str()->check(CLI::PositiveNumber);
  search->add_option("--seed", sf.seed, "base seed")->capture_default_str();
  search->add_option("--restarts", sf.restarts, "see-saw restarts per facet")->capture_default_str()->check(CLI::NonNegativeNumber);
  search->add_option("--out", sf.out, "record file to write")->required();
  search->add_option("--max-denominator", sf.max_denominator, "largest denominator when rounding the normal")->capture_default_str()->check(CLI::PositiveNumber);
  search->add_flag("--serial", sf.serial, "disable OpenMP trial parallelism");

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "re-certify a record file");
  auto* in_opt = verify->add_option("--input", vf.input, "record file")->check(CLI::ExistingFile);
  verify->add_flag("--catalog", vf.catalog, "use the shipped catalog")->excludes(in_opt);
  verify->add_option("--only", vf.only, "certify a single label");
  verify->add_option("--restarts", vf.restarts, "see-saw restarts per entry")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--seed", vf.seed, "see-saw seed")->capture_default_str();
  verify->add_flag("--skip-general", vf.skip_general, "skip the general-state see-saw");

  std::string dd_in, dd_out;
  auto* dedup = app.add_subcommand("dedup", "keep one record per equivalence class");
  dedup->add_option("--input", dd_in, "record file")->required()->check(CLI::ExistingFile);
  dedup->add_option("--out", dd_out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*search) return cmd_search(sf);
    if (*verify) return cmd_verify(vf);
    if (*dedup) return cmd_dedup(dd_in, dd_out);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
