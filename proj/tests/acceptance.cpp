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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>

#include "ghzbell/catalog.hpp"
#include "ghzbell/equivalence.hpp"
#include "ghzbell/facet_lp.hpp"
#include "ghzbell/local_polytope.hpp"
#include "ghzbell/miner.hpp"
#include "ghzbell/quantum.hpp"
#include "oracles.hpp"

using namespace ghzbell;

namespace {

int failures = 0;

void report(int id, const char* title, bool ok, const std::string& detail, double secs) {
  std::printf("%s %d %s: %s (%.1fs)\n", ok ? "PASS" : "FAIL", id, title, detail.c_str(), secs);
  std::fflush(stdout);
  failures += !ok;
}

template <class F>
void criterion(int id, const char* title, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  report(id, title, ok,
         detail, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

std::string fmt(const char* f, double x) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

}  // namespace

int main() {
  const auto catalog = load_catalog();
  auto tensor = [&](const char* label) { return find_entry(catalog, label).tensor; };

  criterion(1, "catalog local bounds", [&](std::string& d) {
    int ok = 0;
    std::string bad;
    for (const auto& e : catalog) {
      if (local_bound(e.tensor).value == e.published_bound) {
        ++ok;
      } else {
        bad += " " + e.label;
      }
    }
    const std::map<std::string, std::int64_t> spot{{"V_343^1", 44},   {"V_444^1", 12},
                                                   {"V_444^S1", 128}, {"V_444^S3", 400},
                                                   {"V_555^2", 13180}};
    for (const auto& [label, L] : spot) {
      if (local_bound(tensor(label.c_str())).value != L) bad += " spot:" + label;
    }
    d = std::to_string(ok) + "/" + std::to_string(catalog.size()) + " exact" + bad;
    return bad.empty() && ok == static_cast<int>(catalog.size());
  });

  criterion(2, "catalog tightness", [&](std::string& d) {
    int ok = 0;
    std::string bad;
    for (const auto& e : catalog) {
      const Tightness t = check_tightness(e.tensor, e.published_bound);
      if (t.tight && t.saturation_rank == e.tensor.scenario().dim()) {
        ++ok;
      } else {
        bad += " " + e.label;
      }
    }
    d = std::to_string(ok) + "/" + std::to_string(catalog.size()) + " facets" + bad;
    return bad.empty();
  });

  criterion(3, "visibilities from 100 seeded restarts", [&](std::string& d) {
    SeesawOptions o;
    o.restarts = 100;
    o.seed = 0;
    int ok = 0;
    double worst = 0.0;
    std::string bad;
    std::map<std::string, double> v;
    for (const auto& e : catalog) {
      const double q = seesaw_equatorial(e.tensor, o).value;
      v[e.label] = static_cast<double>(local_bound(e.tensor).value) / q;
      const double gap = std::abs(v[e.label] - e.published_v);
      worst = std::max(worst, gap);
      if (gap <= 1e-4) {
        ++ok;
      } else {
        bad += " " + e.label;
      }
    }
    const double mermin = 2.0 / seesaw_equatorial(mermin_tensor(), o).value;
    const bool spots = std::abs(mermin - 0.5) <= 1e-9 &&
                       std::abs(v["V_555^1"] - 0.496057) <= 1e-4 &&
                       std::abs(v["V_343^1"] - 0.49967) <= 1e-4 &&
                       std::abs(v["V_553^U1"] - 0.496463) <= 1e-4;
    d = std::to_string(ok) + "/" + std::to_string(catalog.size()) + " within 1e-4, max gap " +
        fmt("%.2e", worst) + ", mermin " + fmt("%.12f", mermin) + bad;
    return bad.empty() && spots;
  });

  criterion(4, "symmetric 5x5x5 case study", [&](std::string& d) {
    const CaseStudyReport r = casestudy_s1(catalog);
    d = std::string(r.expansion_matches ? "expansion matches" : "expansion differs") +
        ", Q " + fmt("%.6f", r.q_max) + " at phi2 " + fmt("%.6f", r.phi2_argmax) + ", v " +
        fmt("%.7f", r.v_crit);
    for (const auto& f : r.failures) d += "; " + f;
    return r.ok();
  });

  criterion(5, "pipeline hit rates", [&](std::string& d) {
    const SearchSummary s222 = hit_rate_experiment(Scenario(2, 2, 2), 100, 1);
    const std::string mermin = canonicalize(mermin_tensor()).digest;
    bool has_mermin = false;
    for (const auto& r : s222.records) has_mermin |= r.digest == mermin;
    const SearchSummary s444 = hit_rate_experiment(Scenario(4, 4, 4), 300, 3);
    const SearchSummary s555 = hit_rate_experiment(Scenario(5, 5, 5), 100, 5);
    d = "2x2x2 hits " + std::to_string(s222.hits) + (has_mermin ? " with" : " without") +
        " mermin; 4x4x4 " + fmt("%.3f", s444.hit_fraction()) + "; 5x5x5 " +
        fmt("%.3f", s555.hit_fraction());
    return s222.hits == 0 && has_mermin && s444.hit_fraction() >= 0.10 &&
           s555.hit_fraction() >= 0.30;
  });

  criterion(6, "facet LP soundness", [&](std::string& d) {
    int ok = 0, total = 0;
    std::string bad;
    for (const Scenario s : {Scenario(2, 2, 2), Scenario(3, 3, 3), Scenario(3, 3, 4)}) {
      for (std::uint64_t trial = 0; trial < 200; ++trial) {
        ++total;
        const AngleProfile a = random_angles(s, 6, trial);
        const FacetResult f = find_facet(seed_tensor(s, a));
        SeesawOptions so;
        so.restarts = 20;
        so.seed = trial;
        so.exec = Exec::serial;
        so.warm_starts = {a};
        const double v = static_cast<double>(f.local_bound) / seesaw_equatorial(f.facet, so).value;
        const bool certified = oracle::local_bound(f.facet) == f.local_bound &&
                               check_tightness(f.facet, f.local_bound).tight;
        if (certified && v <= objective(s, a) + 1e-6) {
          ++ok;
        } else if (bad.size() < 200) {
          bad += " " + s.to_string() + "#" + std::to_string(trial);
        }
      }
    }
    d = std::to_string(ok) + "/" + std::to_string(total) + " certified with v <= objective" + bad;
    return ok == total;
  });

  criterion(7, "equivalence properties", [&](std::string& d) {
    std::mt19937_64 gen(7);
    bool invariant = true, idempotent = true, preserves = true;
    SeesawOptions o;
    o.restarts = 100;
    for (const IntTensor& t : {mermin_tensor(), tensor("V_343^1"), tensor("V_444^U1")}) {
      const IntTensor c = canonicalize(t).tensor;
      const auto L = local_bound(t).value;
      const double q = seesaw_equatorial(t, o).value;
      for (int rep = 0; rep < 100; ++rep) {
        const IntTensor r = apply(random_element(t.scenario(), gen), t);
        invariant &= canonicalize(r).tensor == c;
        if (rep < 10) {
          preserves &= local_bound(r).value == L;
          preserves &= std::abs(seesaw_equatorial(r, o).value - q) <= 1e-9;
        }
      }
    }
    std::set<std::string> first_block;
    int first_rows = 0;
    for (const auto& e : catalog) {
      const CanonicalForm c = canonicalize(e.tensor);
      idempotent &= canonicalize(c.tensor).tensor == c.tensor;
      if (e.label.rfind("V_343", 0) == 0 || e.label.rfind("V_344", 0) == 0) {
        first_block.insert(c.digest);
        ++first_rows;
      }
    }
    d = std::string("invariance ") + (invariant ? "ok" : "broken") + ", idempotence " +
        (idempotent ? "ok" : "broken") + ", L/Q preserved " + (preserves ? "ok" : "broken") +
        ", 3-setting block " + std::to_string(first_rows) + " rows -> " +
        std::to_string(first_block.size()) + " classes";
    return invariant && idempotent && preserves && first_rows == 12 && first_block.size() == 12;
  });

  criterion(8, "oracle cross-checks", [&](std::string& d) {
    std::mt19937_64 gen(8);
    int agree = 0;
    for (const Scenario s : {Scenario(2, 2, 2), Scenario(2, 2, 3)}) {
      for (int rep = 0; rep < 100; ++rep) {
        const IntTensor t = oracle::random_tensor(s, gen, 10);
        agree += local_bound(t).value == oracle::local_bound(t);
      }
    }
    SeesawOptions o;
    o.restarts = 100;
    int general = 0;
    double worst = 0.0;
    std::string bad;
    for (const auto& e : catalog) {
      const double q = seesaw_equatorial(e.tensor, o).value;
      const double g = seesaw_general(e.tensor, o).value;
      const double rel = std::abs(g - q) / q;
      worst = std::max(worst, rel);
      if (rel <= 1e-6) {
        ++general;
      } else {
        bad += " " + e.label;
      }
    }
    d = "bound " + std::to_string(agree) + "/200, general see-saw " + std::to_string(general) +
        "/" + std::to_string(catalog.size()) + " (max rel gap " + fmt("%.1e", worst) + ")" + bad;
    return agree == 200 && general == static_cast<int>(catalog.size());
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
