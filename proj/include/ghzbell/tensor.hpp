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

// Core value types: scenarios, full-correlation coefficient tensors,
// correlation points and equatorial angle profiles.
//
// Every tensor is stored flat with Alice's index slowest and Cecil's
// fastest, i.e. entry (i, j, k) lives at (i * m_B + j) * m_C + k. This is
// the row / group / entry layout used by the published coefficient tables.

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ghzbell/errors.hpp"

namespace ghzbell {

/// Number of measurement settings of each of the three parties.
class Scenario {
 public:
  static constexpr int kMinSettings = 2;
  static constexpr int kMaxSettings = 6;

  Scenario(int m_a, int m_b, int m_c);

  /// Parses "mAxmBxmC", e.g. "3x4x4".
  static Scenario parse(std::string_view text);

  int settings(int party) const { return m_[party]; }
  int m_a() const { return m_[0]; }
  int m_b() const { return m_[1]; }
  int m_c() const { return m_[2]; }
  const std::array<int, 3>& counts() const { return m_; }

  int dim() const { return m_[0] * m_[1] * m_[2]; }
  int total_settings() const { return m_[0] + m_[1] + m_[2]; }

  /// Number of distinct deterministic correlation points, 2^(mA+mB+mC) / 4.
  std::int64_t vertex_count() const {
    return std::int64_t{1} << (total_settings() - 2);
  }

  int index(int i, int j, int k) const { return (i * m_[1] + j) * m_[2] + k; }

  std::string to_string() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;

 private:
  std::array<int, 3> m_;
};

template <class T>
class BellTensor {
 public:
  using value_type = T;

  explicit BellTensor(Scenario s) : scenario_(s), coeffs_(s.dim(), T{}) {}

  BellTensor(Scenario s, std::vector<T> coeffs)
      : scenario_(s), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != s.dim()) {
      throw ScenarioError("tensor over " + s.to_string() + " needs " +
                          std::to_string(s.dim()) + " coefficients, got " +
                          std::to_string(coeffs_.size()));
    }
  }

  const Scenario& scenario() const { return scenario_; }
  int size() const { return static_cast<int>(coeffs_.size()); }

  T& at(int i, int j, int k) { return coeffs_[scenario_.index(i, j, k)]; }
  const T& at(int i, int j, int k) const {
    return coeffs_[scenario_.index(i, j, k)];
  }
  T& operator[](int flat) { return coeffs_[flat]; }
  const T& operator[](int flat) const { return coeffs_[flat]; }

  std::span<const T> coeffs() const { return coeffs_; }
  std::span<T> coeffs() { return coeffs_; }

  bool is_zero() const {
    for (const T& v : coeffs_) {
      if (v != T{}) return false;
    }
    return true;
  }

  friend bool operator==(const BellTensor&, const BellTensor&) = default;

 private:
  Scenario scenario_;
  std::vector<T> coeffs_;
};

using IntTensor = BellTensor<std::int64_t>;
using RealTensor = BellTensor<double>;

RealTensor to_real(const IntTensor& t);

/// gcd of the absolute values of the nonzero coefficients (0 for a zero tensor).
std::int64_t content(const IntTensor& t);

/// Divides by the content so that the nonzero coefficients are coprime.
IntTensor normalized(const IntTensor& t);

/// Correlators <A_i B_j C_k>, each in [-1, 1].
class CorrelationPoint {
 public:
  CorrelationPoint(Scenario s, std::vector<double> values);

  const Scenario& scenario() const { return scenario_; }
  std::span<const double> values() const { return values_; }
  double at(int i, int j, int k) const {
    return values_[scenario_.index(i, j, k)];
  }

 private:
  Scenario scenario_;
  std::vector<double> values_;
};

/// One equatorial measurement angle per setting per party (radians).
struct AngleProfile {
  std::array<std::vector<double>, 3> phi;

  AngleProfile() = default;
  AngleProfile(std::vector<double> a, std::vector<double> b,
               std::vector<double> c)
      : phi{std::move(a), std::move(b), std::move(c)} {}

  /// Same angle list for all three parties.
  static AngleProfile symmetric(const std::vector<double>& angles) {
    return AngleProfile(angles, angles, angles);
  }

  bool matches(const Scenario& s) const;
  void require(const Scenario& s) const;

  /// Flattened (A..., B..., C...) parameter vector.
  std::vector<double> flatten() const;
  static AngleProfile unflatten(const Scenario& s, std::span<const double> x);
};

/// Sum over ijk of M_ijk * p_ijk.
double evaluate(const IntTensor& t, const CorrelationPoint& p);
double evaluate(const RealTensor& t, const CorrelationPoint& p);

/// Plain inner product with an arbitrary coefficient vector of length d.
double dot(const RealTensor& t, std::span<const double> values);
double dot(const IntTensor& t, std::span<const double> values);

/// A weighted correlator A_i B_j C_k in a party-symmetric expression.
struct SymTerm {
  int i, j, k;
  std::int64_t weight;
};

/// Adds each term's weight to every distinct party permutation of (i,j,k).
IntTensor sym_expand(const Scenario& s, std::span<const SymTerm> terms);

/// The 2x2x2 Mermin expression A0B0C0 - A0B1C1 - A1B0C1 - A1B1C0.
IntTensor mermin_tensor();

}  // namespace ghzbell
