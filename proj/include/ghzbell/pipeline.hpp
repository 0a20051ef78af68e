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

// End-to-end search: random angles -> simplex descent -> facet LP ->
// see-saw quantum value -> certified record.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghzbell/exec.hpp"
#include "ghzbell/miner.hpp"
#include "ghzbell/record.hpp"

namespace ghzbell {

struct PipelineConfig {
  SearchConfig search;
  int restarts = 100;
  std::int64_t max_denominator = 10000;
  Exec exec = Exec::parallel;
};

/// A facet counts as a hit when v_crit < 1/2 by more than this margin, so
/// that the Mermin-type value 1/2 is never a hit through round-off.
inline constexpr double kHitMargin = 1e-9;

struct TrialOutcome {
  std::uint64_t trial = 0;
  double seed_objective = 0.0;  // objective at the descent's end point
  std::optional<InequalityRecord> record;
  std::string error;  // set when the trial produced no record

  bool hit() const { return record && record->v_crit < 0.5 - kHitMargin; }
};

/// One trial; deterministic in (config.search.seed, trial). Always serial.
TrialOutcome run_trial(const PipelineConfig& config, std::uint64_t trial);

struct SearchSummary {
  std::vector<TrialOutcome> trials;  // ordered by trial index
  std::vector<InequalityRecord> records;
  int hits = 0;
  int failures = 0;
  double best_v = 1.0;
  int classes = 0;

  double hit_fraction() const {
    return trials.empty() ? 0.0 : static_cast<double>(hits) / trials.size();
  }
};

/// Runs config.search.trials trials (in parallel under Exec::parallel) and
/// merges them in trial order.
SearchSummary run_search(const PipelineConfig& config);

}  // namespace ghzbell
