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

#include "ghzbell/pipeline.hpp"

#include <algorithm>
#include <set>

#include "ghzbell/equivalence.hpp"
#include "ghzbell/facet_lp.hpp"
#include "ghzbell/quantum.hpp"

namespace ghzbell {

TrialOutcome run_trial(const PipelineConfig& config, std::uint64_t trial) {
  const SearchConfig& sc = config.search;
  const Scenario& s = sc.scenario;
  TrialOutcome out;
  out.trial = trial;
  try {
    const AngleProfile init = random_angles(s, sc.seed, trial);
    const DescentResult descent = nelder_mead(s, sc, init);
    out.seed_objective = descent.value;
    if (descent.value == kObjectiveSentinel) {
      out.error = "degenerate seed tensor";
      return out;
    }
    FacetOptions fo;
    fo.max_denominator = config.max_denominator;
    const FacetResult facet = find_facet(seed_tensor(s, descent.angles), fo);

    SeesawOptions so;
    so.restarts = config.restarts;
    so.seed = substream(sc.seed ^ 0x3c6ef372fe94f82bULL, trial)();
    so.exec = Exec::serial;
    so.warm_starts = {descent.angles};
    const QuantumCertificate q = seesaw_equatorial(facet.facet, so);

    InequalityRecord r;
    r.tensor = facet.facet;
    r.local_bound = facet.local_bound;
    r.quantum_value = q.value;
    r.v_crit = visibility(static_cast<double>(facet.local_bound), q.value);
    r.tight = facet.tightness.tight;
    r.digest = canonicalize(facet.facet).digest;
    r.provenance = "seed=" + std::to_string(sc.seed) + " trial=" + std::to_string(trial);
    out.record = std::move(r);
  } catch (const Error& e) {
    out.error = e.what();
  }
  return out;
}

SearchSummary run_search(const PipelineConfig& config) {
  config.search.validate();
  const int n = config.search.trials;
  SearchSummary sum;
  sum.trials.resize(n);
  if (config.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int t = 0; t < n; ++t) sum.trials[t] = run_trial(config, static_cast<std::uint64_t>(t));
  } else {
    for (int t = 0; t < n; ++t) sum.trials[t] = run_trial(config, static_cast<std::uint64_t>(t));
  }
  std::set<std::string> digests;
  for (const auto& t : sum.trials) {
    if (!t.record) {
      ++sum.failures;
      continue;
    }
    sum.records.push_back(*t.record);
    sum.hits += t.hit();
    sum.best_v = std::min(sum.best_v, t.record->v_crit);
    digests.insert(t.record->digest);
  }
  sum.classes = static_cast<int>(digests.size());
  return sum;
}

}  // namespace ghzbell
