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

// Vertices of the local full-correlation polytope, exact local bounds and
// facet certification.
//
// A deterministic strategy is a sign vector per party; its correlation point
// is the rank-1 tensor a_i b_j c_k. The four sign triples (a,b,c), (-a,-b,c),
// (-a,b,-c), (a,-b,-c) give the same point, so each class is represented by
// the triple with a_0 = b_0 = +1. Class index bits, least significant first:
// a_1..a_{mA-1}, b_1..b_{mB-1}, c_0..c_{mC-1}; a set bit means -1.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ghzbell/exec.hpp"
#include "ghzbell/tensor.hpp"

namespace ghzbell {

/// Largest m_A + m_B + m_C for which vertices are enumerated.
inline constexpr int kMaxTotalSettings = 18;

struct CorrelationVertex {
  std::int64_t index = 0;
  std::array<std::vector<int>, 3> sign;  // entries are +1 or -1

  /// Flattened rank-1 tensor a_i b_j c_k.
  std::vector<int> tensor() const;
  CorrelationPoint point(const Scenario& s) const;
};

CorrelationVertex vertex_at(const Scenario& s, std::int64_t index);

/// Canonical class index of an arbitrary sign triple.
std::int64_t vertex_index(const Scenario& s,
                          const std::array<std::vector<int>, 3>& sign);

/// All 2^(mA+mB+mC-2) vertices in index order.
std::vector<CorrelationVertex> enumerate_vertices(const Scenario& s);

/// Row-major (vertex_count x dim) matrix of vertex tensors.
std::vector<std::int8_t> vertex_matrix(const Scenario& s,
                                       Exec exec = Exec::parallel);

template <class T>
struct LocalBound {
  T value{};
  CorrelationVertex argmax;
};

/// max over vertices of <t, v>, computed as
///   max_{b, c} sum_i | sum_jk M_ijk b_j c_k |
/// with Alice's optimal signs a_i = sign of the inner sum. Ties resolve to
/// the first (b, c) in enumeration order under both execution policies.
LocalBound<std::int64_t> local_bound(const IntTensor& t,
                                     Exec exec = Exec::parallel);
LocalBound<double> local_bound(const RealTensor& t, Exec exec = Exec::parallel);

/// Value-only fast path used inside optimisation loops (always serial).
double local_bound_value(const RealTensor& t);

struct Tightness {
  bool tight = false;
  /// Affine rank of the saturating vertex set.
  int saturation_rank = 0;
  std::int64_t saturating_vertices = 0;
};

/// Certifies whether t . x <= bound is a facet of the local polytope. Throws
/// BoundError when `bound` differs from the exact local bound of t.
Tightness check_tightness(const IntTensor& t, std::int64_t bound,
                          Exec exec = Exec::parallel);

namespace detail {

/// Rank over GF(2^61 - 1); a lower bound on the rank over the rationals.
int rank_mod_prime(std::span<const std::int64_t> rows, int cols,
                   int stop_at = -1);

/// Exact rank over the rationals (fraction-free Bareiss elimination).
int rank_exact(std::span<const std::int64_t> rows, int cols);

}  // namespace detail

}  // namespace ghzbell
