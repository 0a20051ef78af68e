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

#include <numbers>

#include "doctest.h"
#include "ghzbell/catalog.hpp"
#include "ghzbell/equivalence.hpp"
#include "ghzbell/local_polytope.hpp"
#include "ghzbell/quantum.hpp"
#include "support.hpp"

using namespace ghzbell;

TEST_SUITE("catalog") {

TEST_CASE("catalog shape") {
  CHECK(catalog().size() == 36);
  for (const auto& e : catalog()) {
    CHECK(e.tensor.size() == e.tensor.scenario().dim());
    CHECK(e.published_v < 0.5);
  }
  CHECK_THROWS_AS(find_entry(catalog(), "V_999^1"), RecordError);
}

TEST_CASE("certify selected entries") {
  for (const auto& [label, L, v] : {std::tuple{"V_343^1", 44, 0.49967},
                                    std::tuple{"V_555^1", 24, 0.496057},
                                    std::tuple{"V_555^2", 13180, 0.496059}}) {
    CAPTURE(label);
    const CertificationReport r = certify_entry(find_entry(catalog(), label));
    CHECK(r.ok());
    CHECK(r.bound == L);
    CHECK(r.tight);
    CHECK(std::abs(r.v_crit - v) < 1e-4);
  }
}

TEST_CASE("injected faults are named") {
  CatalogEntry e = find_entry(catalog(), "V_343^1");
  e.published_bound = 43;
  CertificationReport r = certify_entry(e);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].rfind("bound:", 0) == 0);

  e = find_entry(catalog(), "V_343^1");
  e.published_v = 0.4990;
  r = certify_entry(e);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].rfind("visibility:", 0) == 0);

  // A non-facet: Mermin with one extra correlator.
  e.tensor = mermin_tensor();
  e.tensor.at(1, 1, 1) = 1;
  e.published_bound = local_bound(e.tensor).value;
  e.published_v = 0.5;
  r = certify_entry(e);
  bool named = false;
  for (const auto& f : r.failures) named |= f.rfind("tightness:", 0) == 0;
  CHECK(named);
}

TEST_CASE("symmetric case study") {
  const CaseStudyReport r = casestudy_s1(catalog());
  CHECK(r.ok());
  CHECK(r.expansion_matches);
  CHECK(std::abs(r.q_max - 24.1699) < 1e-3);
  CHECK(std::abs(r.phi2_argmax - 3.73842) < 1e-3);
  CHECK(std::abs(r.v_crit - 0.496485) < 1e-5);
  // The printed closed form does not reproduce the direct evaluation.
  CHECK(std::abs(r.printed_formula - 22.43) < 0.01);
}

TEST_CASE("collapsed scan equals direct tensor evaluation") {
  const IntTensor t = symmetric_555();
  // A step of 2pi scans the single point phi2 = 0.
  const ScanResult origin = scan_s1(t, 2 * std::numbers::pi, Exec::serial);
  CHECK(origin.phi2 == 0.0);
  CHECK(origin.value ==
        doctest::Approx(evaluate(t, ghz_point(t.scenario(), s1_family(0.0)))).epsilon(1e-12));
  for (double step : {1e-3, 0.37, 1.1}) {
    const ScanResult r = scan_s1(t, step, Exec::serial);
    CHECK(r.value ==
          doctest::Approx(evaluate(t, ghz_point(t.scenario(), s1_family(r.phi2)))).epsilon(1e-12));
  }
}

TEST_CASE("serial and parallel scans agree exactly") {
  const IntTensor t = symmetric_555();
  const ScanResult a = scan_s1(t, 1e-5, Exec::serial);
  const ScanResult b = scan_s1(t, 1e-5, Exec::parallel);
  CHECK(a.value == b.value);
  CHECK(a.phi2 == b.phi2);
}

TEST_CASE("three settings per party never beat one half") {
  const SearchSummary s = hit_rate_experiment(Scenario(2, 2, 2), 100, 1);
  CHECK(s.hits == 0);
  CHECK(s.failures == 0);
  CHECK(std::abs(s.best_v - 0.5) < 1e-9);
  const std::string mermin = canonicalize(mermin_tensor()).digest;
  bool found = false;
  for (const auto& r : s.records) found |= r.digest == mermin;
  CHECK(found);
  CHECK_THROWS_AS(hit_rate_experiment(Scenario(2, 2, 2), 10, 1), DomainError);
}

}  // TEST_SUITE
