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

// Published tight inequalities and the routines that re-derive their
// numbers from scratch.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "ghzbell/exec.hpp"
#include "ghzbell/pipeline.hpp"
#include "ghzbell/record.hpp"
#include "ghzbell/tensor.hpp"

#ifndef GHZBELL_DEFAULT_CATALOG
#define GHZBELL_DEFAULT_CATALOG "data/catalog.txt"
#endif

namespace ghzbell {

struct CatalogEntry {
  std::string label;
  IntTensor tensor{Scenario(2, 2, 2)};
  std::int64_t published_bound = 0;
  double published_v = 0.0;
};

/// The label is the record's provenance field.
CatalogEntry entry_from_record(const InequalityRecord& r);

/// Throws RecordError on duplicate labels.
std::vector<CatalogEntry> load_catalog(
    const std::filesystem::path& path = GHZBELL_DEFAULT_CATALOG);

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& catalog,
                               const std::string& label);

struct CertifyOptions {
  int restarts = 100;
  std::uint64_t seed = 0;
  double v_tolerance = 1e-4;
  /// Relative agreement required between the general and GHZ see-saws.
  double general_tolerance = 1e-6;
  bool run_general = true;
  Exec exec = Exec::parallel;
};

struct CertificationReport {
  std::string label;
  std::int64_t bound = 0;
  std::int64_t published_bound = 0;
  bool tight = false;
  int saturation_rank = 0;
  double quantum_value = 0.0;
  double v_crit = 0.0;
  double published_v = 0.0;
  double general_value = 0.0;
  /// Entries start with bound, tightness, visibility or general-seesaw.
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

CertificationReport certify_entry(const CatalogEntry& e,
                                  const CertifyOptions& opt = {});

/// The 5x5x5 party-symmetric inequality from its 14 generating terms.
IntTensor symmetric_555();

/// Angles phi0 = 5pi/8, phi1 = pi/2, phi2, phi3 = 3pi - phi2, phi4 = pi/8,
/// shared by all three parties.
AngleProfile s1_family(double phi2);

struct CaseStudyReport {
  bool expansion_matches = false;
  double q_max = 0.0;
  double phi2_argmax = 0.0;
  double v_crit = 0.0;
  /// The printed closed form at phi2 = 3.73842, for comparison only.
  double printed_formula = 0.0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Grid scan of the family's Bell value over phi2 in [0, 2pi).
struct ScanResult {
  double value = 0.0;
  double phi2 = 0.0;
};
ScanResult scan_s1(const IntTensor& t, double step, Exec exec = Exec::parallel);

/// Rebuilds the symmetric inequality, compares it with the catalog entry
/// `V_555^S1` and recovers its quantum value along the one-parameter family.
CaseStudyReport casestudy_s1(const std::vector<CatalogEntry>& catalog,
                             double step = 1e-6, Exec exec = Exec::parallel);

/// Fraction of pipeline trials whose facet beats visibility 1/2.
SearchSummary hit_rate_experiment(const Scenario& s, int trials, std::uint64_t seed,
                                  int restarts = 100, Exec exec = Exec::parallel);

}  // namespace ghzbell
