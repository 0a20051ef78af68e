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

// First search stage: derivative-free descent over equatorial angle
// profiles. The seeded coefficient tensor M_ijk = cos(phi^A_i + phi^B_j +
// phi^C_k) coincides with the GHZ correlation point of the same profile, so
// its quantum value is taken as sum M_ijk^2 and the objective is the
// classical-per-quantum ratio L(M) / sum M^2.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ghzbell/tensor.hpp"

namespace ghzbell {

struct SearchConfig {
  Scenario scenario{2, 2, 2};
  int trials = 100;
  std::uint64_t seed = 0;
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  /// Per-coordinate offset of the initial simplex vertices (radians).
  double initial_step = 0.3;
  /// Stop when max f - min f over the simplex falls below this.
  double tolerance = 1e-8;
  int max_iterations = 2000;

  void validate() const;
};

RealTensor seed_tensor(const Scenario& s, const AngleProfile& a);

/// Returned when sum M^2 < 1e-12.
inline constexpr double kObjectiveSentinel = HUGE_VAL;

double objective(const Scenario& s, const AngleProfile& a);

struct MinimizeResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
};

/// Nelder-Mead simplex minimisation of an arbitrary function. The returned
/// point is the best simplex vertex, so value <= f(x0).
MinimizeResult nelder_mead_minimize(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> x0, const SearchConfig& config);

struct DescentResult {
  AngleProfile angles;
  double value = 0.0;
  double initial_value = 0.0;
  int iterations = 0;
};

DescentResult nelder_mead(const Scenario& s, const SearchConfig& config,
                          const AngleProfile& init);

/// Uniform random profile from the trial's own random stream.
AngleProfile random_angles(const Scenario& s, std::uint64_t seed,
                           std::uint64_t trial);

}  // namespace ghzbell
