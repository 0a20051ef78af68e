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

#include "ghzbell/tensor.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace ghzbell {

Scenario::Scenario(int m_a, int m_b, int m_c) : m_{m_a, m_b, m_c} {
  for (int m : m_) {
    if (m < kMinSettings || m > kMaxSettings) {
      throw ScenarioError("setting counts must lie in [2, 6], got " +
                          std::to_string(m_a) + "x" + std::to_string(m_b) +
                          "x" + std::to_string(m_c));
    }
  }
}

Scenario Scenario::parse(std::string_view text) {
  std::array<int, 3> m{};
  std::size_t pos = 0;
  for (int p = 0; p < 3; ++p) {
    if (p > 0) {
      if (pos >= text.size() || (text[pos] != 'x' && text[pos] != 'X')) {
        throw ScenarioError("malformed scenario '" + std::string(text) + "'");
      }
      ++pos;
    }
    auto [ptr, ec] =
        std::from_chars(text.data() + pos, text.data() + text.size(), m[p]);
    if (ec != std::errc{}) {
      throw ScenarioError("malformed scenario '" + std::string(text) + "'");
    }
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  if (pos != text.size()) {
    throw ScenarioError("malformed scenario '" + std::string(text) + "'");
  }
  return Scenario(m[0], m[1], m[2]);
}

std::string Scenario::to_string() const {
  return std::to_string(m_[0]) + "x" + std::to_string(m_[1]) + "x" +
         std::to_string(m_[2]);
}

RealTensor to_real(const IntTensor& t) {
  std::vector<double> v(t.coeffs().begin(), t.coeffs().end());
  return RealTensor(t.scenario(), std::move(v));
}

std::int64_t content(const IntTensor& t) {
  std::int64_t g = 0;
  for (std::int64_t c : t.coeffs()) g = std::gcd(g, c);
  return g;
}

IntTensor normalized(const IntTensor& t) {
  std::int64_t g = content(t);
  if (g <= 1) return t;
  IntTensor out = t;
  for (auto& c : out.coeffs()) c /= g;
  return out;
}

CorrelationPoint::CorrelationPoint(Scenario s, std::vector<double> values)
    : scenario_(s), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != s.dim()) {
    throw ScenarioError("correlation point over " + s.to_string() +
                        " needs " + std::to_string(s.dim()) + " values");
  }
  for (double v : values_) {
    if (!(v >= -1.0 - 1e-12 && v <= 1.0 + 1e-12)) {
      throw ScenarioError("correlator outside [-1, 1]");
    }
  }
}

bool AngleProfile::matches(const Scenario& s) const {
  for (int p = 0; p < 3; ++p) {
    if (static_cast<int>(phi[p].size()) != s.settings(p)) return false;
  }
  return true;
}

void AngleProfile::require(const Scenario& s) const {
  if (!matches(s)) {
    throw ScenarioError("angle profile does not match scenario " +
                        s.to_string());
  }
}

std::vector<double> AngleProfile::flatten() const {
  std::vector<double> x;
  for (const auto& v : phi) x.insert(x.end(), v.begin(), v.end());
  return x;
}

AngleProfile AngleProfile::unflatten(const Scenario& s,
                                     std::span<const double> x) {
  if (static_cast<int>(x.size()) != s.total_settings()) {
    throw ScenarioError("angle vector length mismatch");
  }
  AngleProfile a;
  std::size_t off = 0;
  for (int p = 0; p < 3; ++p) {
    a.phi[p].assign(x.begin() + off, x.begin() + off + s.settings(p));
    off += s.settings(p);
  }
  return a;
}

namespace {

template <class T>
double dot_impl(const BellTensor<T>& t, std::span<const double> values) {
  if (static_cast<int>(values.size()) != t.size()) {
    throw ScenarioError("coefficient/point length mismatch");
  }
  double s = 0.0;
  for (int n = 0; n < t.size(); ++n) s += static_cast<double>(t[n]) * values[n];
  return s;
}

template <class T>
double evaluate_impl(const BellTensor<T>& t, const CorrelationPoint& p) {
  if (!(t.scenario() == p.scenario())) {
    throw ScenarioError("scenario mismatch: tensor " +
                        t.scenario().to_string() + ", point " +
                        p.scenario().to_string());
  }
  return dot_impl(t, p.values());
}

}  // namespace

double evaluate(const IntTensor& t, const CorrelationPoint& p) {
  return evaluate_impl(t, p);
}
double evaluate(const RealTensor& t, const CorrelationPoint& p) {
  return evaluate_impl(t, p);
}
double dot(const RealTensor& t, std::span<const double> values) {
  return dot_impl(t, values);
}
double dot(const IntTensor& t, std::span<const double> values) {
  return dot_impl(t, values);
}

IntTensor sym_expand(const Scenario& s, std::span<const SymTerm> terms) {
  if (s.m_a() != s.m_b() || s.m_b() != s.m_c()) {
    throw ScenarioError("symmetrization needs equal setting counts, got " +
                        s.to_string());
  }
  IntTensor t(s);
  for (const SymTerm& term : terms) {
    std::array<int, 3> idx{term.i, term.j, term.k};
    for (int v : idx) {
      if (v < 0 || v >= s.m_a()) throw ScenarioError("term index out of range");
    }
    std::sort(idx.begin(), idx.end());
    // next_permutation over the sorted triple visits each distinct image once
    do {
      t.at(idx[0], idx[1], idx[2]) += term.weight;
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  return t;
}

IntTensor mermin_tensor() {
  IntTensor t(Scenario(2, 2, 2));
  t.at(0, 0, 0) = 1;
  t.at(0, 1, 1) = -1;
  t.at(1, 0, 1) = -1;
  t.at(1, 1, 0) = -1;
  return t;
}

}  // namespace ghzbell
