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

#include "ghzbell/catalog.hpp"

#include <omp.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>

#include "ghzbell/local_polytope.hpp"
#include "ghzbell/quantum.hpp"

namespace ghzbell {

namespace {

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

}  // namespace

CatalogEntry entry_from_record(const InequalityRecord& r) {
  CatalogEntry e;
  e.label = r.provenance;
  e.tensor = r.tensor;
  e.published_bound = r.local_bound;
  e.published_v = r.v_crit;
  return e;
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path) {
  std::vector<CatalogEntry> out;
  std::set<std::string> labels;
  for (const auto& r : load_records(path)) {
    if (!labels.insert(r.provenance).second) {
      throw RecordError("duplicate catalog label " + r.provenance);
    }
    out.push_back(entry_from_record(r));
  }
  return out;
}

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& catalog,
                               const std::string& label) {
  for (const auto& e : catalog) {
    if (e.label == label) return e;
  }
  throw RecordError("no catalog entry labelled " + label);
}

CertificationReport certify_entry(const CatalogEntry& e, const CertifyOptions& opt) {
  CertificationReport rep;
  rep.label = e.label;
  rep.published_bound = e.published_bound;
  rep.published_v = e.published_v;

  rep.bound = local_bound(e.tensor, opt.exec).value;
  if (rep.bound != e.published_bound) {
    rep.failures.push_back("bound: computed " + std::to_string(rep.bound) + ", published " +
                           std::to_string(e.published_bound));
  }

  const Tightness t = check_tightness(e.tensor, rep.bound, opt.exec);
  rep.tight = t.tight;
  rep.saturation_rank = t.saturation_rank;
  if (!t.tight) {
    rep.failures.push_back("tightness: affine rank " + std::to_string(t.saturation_rank) +
                           " of " + std::to_string(e.tensor.scenario().dim()));
  }

  SeesawOptions so;
  so.restarts = opt.restarts;
  so.seed = opt.seed;
  so.exec = opt.exec;
  const QuantumCertificate q = seesaw_equatorial(e.tensor, so);
  rep.quantum_value = q.value;
  rep.v_crit = q.value > 0.0 ? static_cast<double>(rep.bound) / q.value : HUGE_VAL;
  if (!(std::abs(rep.v_crit - e.published_v) <= opt.v_tolerance)) {
    rep.failures.push_back("visibility: computed " + fmt("%.6f", rep.v_crit) + ", published " +
                           fmt("%.6f", e.published_v));
  }

  if (opt.run_general) {
    const GeneralCertificate g = seesaw_general(e.tensor, so);
    rep.general_value = g.value;
    const double gap = std::abs(g.value - q.value);
    if (!(gap <= opt.general_tolerance * std::max(1.0, std::abs(q.value)))) {
      rep.failures.push_back("general-seesaw: general " + fmt("%.9f", g.value) +
                             " vs GHZ " + fmt("%.9f", q.value));
    }
  }
  return rep;
}

IntTensor symmetric_555() {
  static constexpr std::array<SymTerm, 14> terms{{
      {0, 0, 2, -1}, {0, 0, 3, -1}, {0, 2, 4, 1},  {0, 3, 4, 1},  {1, 1, 2, 1},
      {1, 1, 3, -1}, {1, 2, 2, -1}, {1, 3, 3, 1},  {2, 2, 2, -2}, {2, 2, 3, 1},
      {2, 3, 3, -1}, {2, 4, 4, 1},  {3, 3, 3, 2},  {3, 4, 4, 1},
  }};
  return sym_expand(Scenario(5, 5, 5), terms);
}

AngleProfile s1_family(double phi2) {
  using std::numbers::pi;
  return AngleProfile::symmetric({5 * pi / 8, pi / 2, phi2, 3 * pi - phi2, pi / 8});
}

ScanResult scan_s1(const IntTensor& t, double step, Exec exec) {
  using std::numbers::pi;
  if (!(t.scenario() == Scenario(5, 5, 5))) throw ScenarioError("the family needs 5x5x5");
  if (!(step > 0.0)) throw DomainError("scan step must be positive");
  // Along the family each entry is cos(offset + f * phi2) with f = #2 - #3
  // among (i, j, k), so the tensor sum collapses onto frequencies -3..3.
  const AngleProfile base = s1_family(0.0);
  std::array<double, 7> cos_w{}, sin_w{};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      for (int k = 0; k < 5; ++k) {
        const std::int64_t m = t.at(i, j, k);
        if (m == 0) continue;
        const std::array<int, 3> n{i, j, k};
        double offset = 0.0;
        int f = 0;
        for (int x : n) {
          offset += base.phi[0][x];
          f += (x == 2) - (x == 3);
        }
        cos_w[f + 3] += static_cast<double>(m) * std::cos(offset);
        sin_w[f + 3] -= static_cast<double>(m) * std::sin(offset);
      }
  auto value = [&](double phi) {
    double s = 0.0;
    for (int f = -3; f <= 3; ++f) {
      s += cos_w[f + 3] * std::cos(f * phi) + sin_w[f + 3] * std::sin(f * phi);
    }
    return s;
  };

  const auto n = static_cast<std::int64_t>(std::ceil(2 * pi / step));
  ScanResult best{-HUGE_VAL, 0.0};
  std::int64_t best_idx = -1;
  auto sweep = [&](std::int64_t lo, std::int64_t hi, ScanResult& b, std::int64_t& bi) {
    for (std::int64_t x = lo; x < hi; ++x) {
      const double phi = static_cast<double>(x) * step;
      const double v = value(phi);
      if (v > b.value) {
        b = {v, phi};
        bi = x;
      }
    }
  };
  if (exec == Exec::serial) {
    sweep(0, n, best, best_idx);
    return best;
  }
#pragma omp parallel
  {
    const std::int64_t nt = omp_get_num_threads();
    const std::int64_t id = omp_get_thread_num();
    ScanResult local{-HUGE_VAL, 0.0};
    std::int64_t li = -1;
    sweep(n * id / nt, n * (id + 1) / nt, local, li);
#pragma omp critical
    if (li >= 0 && (local.value > best.value || (local.value == best.value && li < best_idx))) {
      best = local;
      best_idx = li;
    }
  }
  return best;
}

CaseStudyReport casestudy_s1(const std::vector<CatalogEntry>& catalog, double step,
                             Exec exec) {
  CaseStudyReport rep;
  const IntTensor built = symmetric_555();
  const CatalogEntry& e = find_entry(catalog, "V_555^S1");
  rep.expansion_matches = built == e.tensor;
  if (!rep.expansion_matches) {
    rep.failures.push_back("expansion: symmetrised terms differ from the catalog tensor");
  }

  const ScanResult best = scan_s1(built, step, exec);
  rep.q_max = best.value;
  rep.phi2_argmax = best.phi2;
  const std::int64_t bound = local_bound(built, exec).value;
  rep.v_crit = static_cast<double>(bound) / best.value;

  const double p = 3.73842;
  rep.printed_formula = -12 * std::cos(3 * p) + 12 * std::cos(p) * (std::sin(p) - 1) -
                        12 * std::numbers::sqrt2 * std::sin(p);

  if (std::abs(rep.q_max - 24.1699) > 1e-3) {
    rep.failures.push_back("maximum: " + fmt("%.6f", rep.q_max) + ", expected 24.1699");
  }
  if (std::abs(rep.phi2_argmax - 3.73842) > 1e-3) {
    rep.failures.push_back("argmax: " + fmt("%.6f", rep.phi2_argmax) + ", expected 3.73842");
  }
  if (std::abs(rep.v_crit - 0.496485) > 1e-5) {
    rep.failures.push_back("visibility: " + fmt("%.7f", rep.v_crit) + ", expected 0.496485");
  }
  return rep;
}

SearchSummary hit_rate_experiment(const Scenario& s, int trials, std::uint64_t seed,
                                  int restarts, Exec exec) {
  if (trials < 50) throw DomainError("hit-rate experiments need at least 50 trials");
  PipelineConfig cfg;
  cfg.search.scenario = s;
  cfg.search.trials = trials;
  cfg.search.seed = seed;
  cfg.restarts = restarts;
  cfg.exec = exec;
  return run_search(cfg);
}

}  // namespace ghzbell
