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

// Second search stage: snap a direction g in correlation space to the facet
// of the local polytope that the ray through g leaves by.
//
// The polytope is centrally symmetric with the origin inside, so its facets
// are the vertices of the polar {c : <v, c> <= 1 for every vertex v}. We
// solve
//
//   maximise <g, c>  subject to  <v, c> <= 1  for all vertices v
//
// through its dual, min sum y_v s.t. sum y_v v = g, y >= 0, with a revised
// simplex whose columns are generated on demand: the most violated polar
// constraint for multipliers pi is the local-bound argmax of pi. The
// optimal multipliers form a polar vertex c*, i.e. a facet normal, which is
// then integerised and re-certified in exact arithmetic.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ghzbell/local_polytope.hpp"
#include "ghzbell/tensor.hpp"

namespace ghzbell {

struct FacetOptions {
  std::int64_t max_denominator = 10000;
  double feasibility_tol = 1e-9;
  int max_pivots = 200000;
  /// Consecutive degenerate pivots before switching to Bland's rule.
  int degenerate_limit = 50;
  int refactor_interval = 50;
};

struct PolarSolution {
  std::vector<double> normal;  // c*, with max_v <v, c*> = 1
  double value = 0.0;          // <g, c*>
  std::vector<std::int64_t> basis;  // vertex indices of the optimal basis
  int pivots = 0;
  int bland_pivots = 0;
};

PolarSolution solve_polar_lp(const RealTensor& g, const FacetOptions& opt = {});

struct FacetResult {
  IntTensor facet{Scenario(2, 2, 2)};
  std::int64_t local_bound = 0;
  std::vector<double> normal;
  /// facet ~= scale * normal.
  double scale = 0.0;
  /// <g, normal>; the ray through g leaves the polytope at g / ray_gauge.
  double ray_gauge = 0.0;
  Tightness tightness;
  int pivots = 0;
  /// The float normal did not round within max_denominator and the facet
  /// came from solving the optimal basis system exactly.
  bool exact_fallback = false;
};

FacetResult find_facet(const RealTensor& g, const FacetOptions& opt = {});

/// Smallest integer vector proportional to c (coprime entries) whose
/// entries are continued-fraction reconstructions with denominators up to
/// max_denominator; throws IntegerizeError if none reproduces c to 1e-6.
std::vector<std::int64_t> integerize(std::span<const double> c,
                                     std::int64_t max_denominator = 10000);
IntTensor integerize(const RealTensor& c, std::int64_t max_denominator = 10000);

}  // namespace ghzbell
