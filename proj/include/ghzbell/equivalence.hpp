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

// Relabelings of settings, outcomes and parties, and a canonical form for
// their orbits.

#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ghzbell/tensor.hpp"

namespace ghzbell {

/// New axis p is old party `party[p]`; its setting s is old setting
/// perm[p][s], negated when sign[p][s] == -1:
///
///   R[n_0, n_1, n_2] = prod_p sign[p][n_p] * T[o],  o_{party[p]} = perm[p][n_p].
struct RelabelingElement {
  std::array<int, 3> party{0, 1, 2};
  std::array<std::vector<int>, 3> perm;
  std::array<std::vector<int>, 3> sign;

  static RelabelingElement identity(const Scenario& s);

  /// Throws RelabelingError unless this is a valid element for s.
  void validate(const Scenario& s) const;

  RelabelingElement inverse() const;
};

RelabelingElement random_element(const Scenario& s, std::mt19937_64& gen);

template <class T>
BellTensor<T> apply(const RelabelingElement& e, const BellTensor<T>& t) {
  const Scenario& s = t.scenario();
  e.validate(s);
  BellTensor<T> out(s);
  std::array<int, 3> o{};
  for (int i = 0; i < s.m_a(); ++i)
    for (int j = 0; j < s.m_b(); ++j)
      for (int k = 0; k < s.m_c(); ++k) {
        const std::array<int, 3> n{i, j, k};
        int sg = 1;
        for (int p = 0; p < 3; ++p) {
          o[e.party[p]] = e.perm[p][n[p]];
          sg *= e.sign[p][n[p]];
        }
        const T v = t.at(o[0], o[1], o[2]);
        out.at(i, j, k) = sg > 0 ? v : -v;
      }
  return out;
}

struct CanonicalForm {
  IntTensor tensor{Scenario(2, 2, 2)};
  /// 32 hex digits of SHA-256 over the scenario and canonical coefficients.
  std::string digest;
  /// apply(element, input) == tensor.
  RelabelingElement element;
  /// Setting counts left after dropping all-zero slices.
  std::array<int, 3> effective_counts{};
  std::int64_t nodes = 0;
};

inline constexpr std::int64_t kCanonicalNodeBudget = 10'000'000;

/// Lexicographically smallest flattened tensor in the relabeling orbit of t.
/// Throws CanonicalBudgetError if the search exceeds node_budget.
CanonicalForm canonicalize(const IntTensor& t,
                           std::int64_t node_budget = kCanonicalNodeBudget);

/// Cheap relabeling invariant: per party, the sorted multiset of sorted
/// per-slice |coefficient| multisets.
struct Fingerprint {
  Scenario scenario{2, 2, 2};
  std::array<std::vector<std::vector<std::int64_t>>, 3> parties;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const IntTensor& t);

/// Same scenario and same canonical form.
bool equivalent(const IntTensor& a, const IntTensor& b);

}  // namespace ghzbell
