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

#include "doctest.h"
#include "ghzbell/equivalence.hpp"
#include "ghzbell/facet_lp.hpp"
#include "ghzbell/local_polytope.hpp"
#include "ghzbell/miner.hpp"
#include "ghzbell/quantum.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace ghzbell;

namespace {

double sq_norm(const RealTensor& g) {
  double q = 0.0;
  for (double x : g.coeffs()) q += x * x;
  return q;
}

// Independent re-certification: brute-force bound and rational affine rank.
void check_facet_by_oracle(const FacetResult& f) {
  CHECK(oracle::local_bound(f.facet) == f.local_bound);
  CHECK(oracle::affine_rank(oracle::saturating(f.facet, f.local_bound)) ==
        f.facet.scenario().dim());
}

}  // namespace

TEST_SUITE("facet_lp") {

TEST_CASE("integerize examples") {
  const std::vector<double> dyadic{0.5, -0.5, 0.25};
  CHECK(integerize(dyadic) == std::vector<std::int64_t>{2, -2, 1});
  const std::vector<double> third{1.0 / 3.0 + 1e-12, 1.0, 0.5};
  CHECK(integerize(third) == std::vector<std::int64_t>{2, 6, 3});
  const std::vector<double> with_zero{0.0, 1e-14, -0.75, 1.5};
  CHECK(integerize(with_zero) == std::vector<std::int64_t>{0, 0, -1, 2});
  const std::vector<double> irrational{1.0, 3.14159265358979, 2.718281828459045};
  CHECK_THROWS_AS(integerize(irrational, 10), IntegerizeError);
  const std::vector<double> zero(4, 0.0);
  CHECK_THROWS_AS(integerize(zero), DomainError);
}

TEST_CASE("polar solution for the mermin direction") {
  const PolarSolution sol = solve_polar_lp(to_real(mermin_tensor()));
  CHECK(local_bound(RealTensor(Scenario(2, 2, 2), sol.normal)).value <= 1.0 + 1e-9);
  CHECK(integerize(RealTensor(Scenario(2, 2, 2), sol.normal)) == mermin_tensor());
  CHECK(sol.value == doctest::Approx(2.0));
}

TEST_CASE("mermin direction gives a mermin facet") {
  const FacetResult f = find_facet(to_real(mermin_tensor()));
  CHECK(f.local_bound == 2);
  CHECK(f.tightness.tight);
  CHECK(canonicalize(f.facet).tensor == canonicalize(mermin_tensor()).tensor);
  check_facet_by_oracle(f);
}

TEST_CASE("a vertex direction lands on a facet through that vertex") {
  for (const Scenario s : {Scenario(2, 2, 2), Scenario(3, 3, 3)}) {
    for (std::int64_t idx : {std::int64_t{0}, std::int64_t{5}, s.vertex_count() - 1}) {
      const auto vt = vertex_at(s, idx).tensor();
      const FacetResult f = find_facet(RealTensor(s, std::vector<double>(vt.begin(), vt.end())));
      std::int64_t val = 0;
      for (int n = 0; n < s.dim(); ++n) val += f.facet[n] * vt[n];
      CHECK(val == f.local_bound);
      check_facet_by_oracle(f);
    }
  }
}

TEST_CASE("facets from seeded directions are sound") {
  SearchConfig cfg;
  for (const Scenario s : {Scenario(2, 2, 2), Scenario(3, 3, 3), Scenario(3, 3, 4)}) {
    for (std::uint64_t trial = 0; trial < 25; ++trial) {
      const AngleProfile a = random_angles(s, 2718, trial);
      const RealTensor g = seed_tensor(s, a);
      const FacetResult f = find_facet(g);
      check_facet_by_oracle(f);

      // c* lies in the polar and the basis vertices sit on its boundary.
      CHECK(local_bound(RealTensor(s, f.normal)).value <= 1.0 + 1e-9);
      // The exit point g / <g, c*> lies on the facet.
      CHECK(dot(g, f.normal) == doctest::Approx(f.ray_gauge));
      std::vector<double> exit(g.coeffs().begin(), g.coeffs().end());
      for (double& x : exit) x /= f.ray_gauge;
      CHECK(dot(f.facet, exit) == doctest::Approx(static_cast<double>(f.local_bound)).epsilon(1e-6));
      // The exit point is never beyond the supporting hyperplane of g.
      CHECK(1.0 / f.ray_gauge <= local_bound_value(g) / sq_norm(g) + 1e-12);

      SeesawOptions so;
      so.restarts = 10;
      so.warm_starts = {a};
      const double q = seesaw_equatorial(f.facet, so).value;
      CHECK(visibility(static_cast<double>(f.local_bound), q) <= objective(s, a) + 1e-6);
    }
  }
}

TEST_CASE("exact basis solve recovers facets with large denominators") {
  // This descent ends on a facet whose float normal does not round within
  // the default denominator budget.
  const Scenario s(5, 5, 5);
  SearchConfig cfg;
  const auto d = nelder_mead(s, cfg, random_angles(s, 5, 1));
  const RealTensor g = seed_tensor(s, d.angles);
  CHECK_THROWS_AS(integerize(solve_polar_lp(g).normal), IntegerizeError);
  const FacetResult f = find_facet(g);
  CHECK(f.exact_fallback);
  CHECK(f.tightness.tight);
  CHECK(f.local_bound == local_bound(f.facet).value);
  CHECK(content(f.facet) == 1);
}

TEST_CASE("input checks") {
  CHECK_THROWS_AS(find_facet(RealTensor(Scenario(2, 2, 2))), DomainError);
  FacetOptions opt;
  opt.max_pivots = 0;
  CHECK_THROWS_AS(find_facet(seed_tensor(Scenario(3, 3, 3), random_angles(Scenario(3, 3, 3), 1, 1)), opt),
                  LpError);
}

}  // TEST_SUITE
