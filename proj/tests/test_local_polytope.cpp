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

#include <random>
#include <set>

#include "doctest.h"
#include "ghzbell/equivalence.hpp"
#include "ghzbell/local_polytope.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace ghzbell;

TEST_SUITE("local_polytope") {

TEST_CASE("vertex counts") {
  CHECK(enumerate_vertices(Scenario(2, 2, 2)).size() == 16);
  CHECK(enumerate_vertices(Scenario(3, 3, 4)).size() == 256);
  CHECK(enumerate_vertices(Scenario(5, 5, 5)).size() == 8192);
  CHECK(Scenario(6, 6, 6).vertex_count() == 65536);
}

TEST_CASE("vertices are distinct sign tensors") {
  const Scenario s(3, 3, 3);
  std::set<std::vector<int>> seen;
  for (const auto& v : enumerate_vertices(s)) {
    const auto t = v.tensor();
    for (int x : t) CHECK((x == 1 || x == -1));
    CHECK(seen.insert(t).second);
    CHECK(vertex_at(s, v.index).tensor() == t);
  }
  // Every one of the 2^9 strategies lands on one of the classes.
  for (std::uint64_t bits = 0; bits < 512; ++bits) {
    const auto st = oracle::strategy(s, bits);
    const auto p = oracle::point(s, st);
    const auto idx = vertex_index(s, {st.a, st.b, st.c});
    const auto t = vertex_at(s, idx).tensor();
    CHECK(std::equal(t.begin(), t.end(), p.begin()));
  }
}

TEST_CASE("the four sign-equivalent triples share one vertex") {
  const Scenario s(2, 3, 4);
  std::array<std::vector<int>, 3> a{{{1, -1}, {-1, 1, 1}, {1, 1, -1, -1}}};
  const auto base = vertex_index(s, a);
  auto neg = [](std::vector<int> v) {
    for (int& x : v) x = -x;
    return v;
  };
  CHECK(vertex_index(s, {neg(a[0]), neg(a[1]), a[2]}) == base);
  CHECK(vertex_index(s, {neg(a[0]), a[1], neg(a[2])}) == base);
  CHECK(vertex_index(s, {a[0], neg(a[1]), neg(a[2])}) == base);
  CHECK(vertex_index(s, {neg(a[0]), a[1], a[2]}) != base);
}

TEST_CASE("known local bounds") {
  CHECK(local_bound(mermin_tensor()).value == 2);
  CHECK(local_bound(catalog_tensor("V_555^S1")).value == 12);
  CHECK(local_bound(catalog_tensor("V_444^1")).value == 12);
  CHECK(local_bound(IntTensor(Scenario(4, 4, 4))).value == 0);
}

TEST_CASE("collapsed bound agrees with brute force over all strategies") {
  std::mt19937_64 gen(2024);
  for (const Scenario s : {Scenario(2, 2, 2), Scenario(2, 2, 3), Scenario(2, 3, 3),
                           Scenario(3, 2, 4)}) {
    for (int rep = 0; rep < 60; ++rep) {
      const IntTensor t = oracle::random_tensor(s, gen, 5);
      const auto lb = local_bound(t);
      CHECK(lb.value == oracle::local_bound(t));
      const auto vt = lb.argmax.tensor();
      std::int64_t at = 0;
      for (int n = 0; n < t.size(); ++n) at += t[n] * vt[n];
      CHECK(at == lb.value);
    }
  }
}

TEST_CASE("real bound matches integer bound and scales linearly") {
  std::mt19937_64 gen(7);
  const Scenario s(3, 4, 4);
  for (int rep = 0; rep < 20; ++rep) {
    const IntTensor t = oracle::random_tensor(s, gen, 20);
    const double exact = static_cast<double>(local_bound(t).value);
    CHECK(local_bound(to_real(t)).value == doctest::Approx(exact));
    CHECK(local_bound_value(to_real(t)) == doctest::Approx(exact));
    RealTensor scaled = to_real(t);
    for (double& c : scaled.coeffs()) c *= 2.75;
    CHECK(local_bound(scaled).value == doctest::Approx(2.75 * exact));
  }
}

TEST_CASE("serial and parallel bounds are identical, argmax included") {
  std::mt19937_64 gen(99);
  const Scenario s(5, 5, 5);
  for (int rep = 0; rep < 10; ++rep) {
    const IntTensor t = oracle::random_tensor(s, gen, 3);
    const auto a = local_bound(t, Exec::serial);
    const auto b = local_bound(t, Exec::parallel);
    CHECK(a.value == b.value);
    CHECK(a.argmax.index == b.argmax.index);
  }
}

TEST_CASE("no vertex exceeds the bound") {
  const auto& t = catalog_tensor("V_444^U1");
  const auto L = local_bound(t).value;
  std::int64_t hits = 0;
  for (const auto& v : enumerate_vertices(t.scenario())) {
    const auto vt = v.tensor();
    std::int64_t val = 0;
    for (int n = 0; n < t.size(); ++n) val += t[n] * vt[n];
    CHECK(val <= L);
    hits += val == L;
  }
  CHECK(hits > 0);
}

TEST_CASE("local bound is invariant under relabelings") {
  std::mt19937_64 gen(13);
  for (const char* label : {"V_343^1", "V_444^S2", "V_553^U1"}) {
    const auto& t = catalog_tensor(label);
    const auto L = local_bound(t).value;
    for (int rep = 0; rep < 10; ++rep) {
      CHECK(local_bound(apply(random_element(t.scenario(), gen), t)).value == L);
    }
  }
}

TEST_CASE("mermin is a facet") {
  const Tightness m = check_tightness(mermin_tensor(), 2);
  CHECK(m.tight);
  CHECK(m.saturation_rank == 8);
  const auto sat = oracle::saturating(mermin_tensor(), 2);
  CHECK(m.saturating_vertices == static_cast<std::int64_t>(sat.size()));
  CHECK(oracle::affine_rank(sat) == 8);
}

TEST_CASE("a single correlator bound is a trivial facet") {
  IntTensor t(Scenario(2, 2, 2));
  t.at(0, 0, 0) = 1;
  const Tightness r = check_tightness(t, 1);
  CHECK(r.saturation_rank == oracle::affine_rank(oracle::saturating(t, 1)));
  CHECK(r.tight);
  CHECK(r.saturating_vertices == 8);
}

TEST_CASE("a sum of two correlator bounds is not a facet") {
  IntTensor t(Scenario(2, 2, 2));
  t.at(0, 0, 0) = 1;
  t.at(0, 0, 1) = 1;
  const Tightness r = check_tightness(t, 2);
  CHECK_FALSE(r.tight);
  CHECK(r.saturation_rank == oracle::affine_rank(oracle::saturating(t, 2)));
  CHECK(r.saturation_rank < 8);
}

TEST_CASE("tightness needs the exact bound") {
  CHECK_THROWS_AS(check_tightness(mermin_tensor(), 3), BoundError);
  CHECK_THROWS_AS(check_tightness(mermin_tensor(), 1), BoundError);
}

TEST_CASE("saturation rank agrees with a rational-arithmetic oracle") {
  std::mt19937_64 gen(41);
  for (const Scenario s : {Scenario(2, 2, 2), Scenario(2, 2, 3), Scenario(2, 3, 3)}) {
    for (int rep = 0; rep < 40; ++rep) {
      const IntTensor t = oracle::random_tensor(s, gen, 2);
      if (t.is_zero()) continue;
      const auto L = oracle::local_bound(t);
      const Tightness r = check_tightness(t, L, rep % 2 ? Exec::serial : Exec::parallel);
      CHECK(r.saturation_rank == oracle::affine_rank(oracle::saturating(t, L)));
      CHECK(r.tight == (r.saturation_rank == s.dim()));
    }
  }
}

TEST_CASE("the vertex set is full dimensional") {
  for (const Scenario s : {Scenario(2, 2, 2), Scenario(3, 3, 4), Scenario(4, 4, 4)}) {
    const auto vm = vertex_matrix(s);
    std::vector<std::int64_t> rows(vm.begin(), vm.end());
    CHECK(detail::rank_exact(rows, s.dim()) == s.dim());
    CHECK(detail::rank_mod_prime(rows, s.dim()) == s.dim());
  }
}

TEST_CASE("modular rank never exceeds rational rank") {
  std::mt19937_64 gen(17);
  for (int rep = 0; rep < 40; ++rep) {
    const int r = 3 + static_cast<int>(gen() % 6), c = 3 + static_cast<int>(gen() % 6);
    std::vector<std::int64_t> flat;
    std::vector<std::vector<std::int64_t>> rows(r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        // Low-rank products make rank deficiency common.
        const std::int64_t v = static_cast<std::int64_t>(gen() % 3) - 1 +
                               (j % 2 ? rows[i].empty() ? 0 : rows[i][0] : 0);
        rows[i].push_back(v);
        flat.push_back(v);
      }
    const int q = oracle::rational_rank(rows);
    CHECK(detail::rank_exact(flat, c) == q);
    CHECK(detail::rank_mod_prime(flat, c) <= q);
  }
}

}  // TEST_SUITE
