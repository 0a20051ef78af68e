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

// Serial reference vs OpenMP kernel for the hot paths. Arg 0 is serial,
// arg 1 parallel.

#include <benchmark/benchmark.h>

#include "ghzbell/catalog.hpp"
#include "ghzbell/local_polytope.hpp"
#include "ghzbell/quantum.hpp"

using namespace ghzbell;

namespace {

Exec policy(const benchmark::State& st) { return st.range(0) ? Exec::parallel : Exec::serial; }

const std::vector<CatalogEntry>& entries() {
  static const auto c = load_catalog();
  return c;
}

void BM_LocalBound(benchmark::State& st) {
  const IntTensor t = find_entry(entries(), "V_555^2").tensor;
  for (auto _ : st) benchmark::DoNotOptimize(local_bound(t, policy(st)).value);
}
BENCHMARK(BM_LocalBound)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_Tightness(benchmark::State& st) {
  const CatalogEntry& e = find_entry(entries(), "V_555^1");
  for (auto _ : st) {
    benchmark::DoNotOptimize(check_tightness(e.tensor, e.published_bound, policy(st)).tight);
  }
}
BENCHMARK(BM_Tightness)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SeesawRestarts(benchmark::State& st) {
  const IntTensor t = find_entry(entries(), "V_444^U1").tensor;
  SeesawOptions o;
  o.restarts = 100;
  o.exec = policy(st);
  for (auto _ : st) benchmark::DoNotOptimize(seesaw_equatorial(t, o).value);
}
BENCHMARK(BM_SeesawRestarts)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SymmetricScan(benchmark::State& st) {
  const IntTensor t = find_entry(entries(), "V_555^S1").tensor;
  for (auto _ : st) benchmark::DoNotOptimize(scan_s1(t, 1e-5, policy(st)).value);
}
BENCHMARK(BM_SymmetricScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
