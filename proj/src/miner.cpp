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

#include "ghzbell/miner.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ghzbell/exec.hpp"
#include "ghzbell/local_polytope.hpp"

namespace ghzbell {

void SearchConfig::validate() const {
  if (trials < 1) throw DomainError("trial count must be at least 1");
  if (!(tolerance > 0.0)) throw DomainError("tolerance must be positive");
  if (max_iterations < 1) throw DomainError("max_iterations must be positive");
  if (!(reflection > 0.0) || !(expansion > 1.0) || !(contraction > 0.0 && contraction < 1.0) ||
      !(shrink > 0.0 && shrink < 1.0)) {
    throw DomainError("invalid simplex coefficients");
  }
}

RealTensor seed_tensor(const Scenario& s, const AngleProfile& a) {
  a.require(s);
  RealTensor t(s);
  for (int i = 0; i < s.m_a(); ++i)
    for (int j = 0; j < s.m_b(); ++j)
      for (int k = 0; k < s.m_c(); ++k)
        t.at(i, j, k) = std::cos(a.phi[0][i] + a.phi[1][j] + a.phi[2][k]);
  return t;
}

double objective(const Scenario& s, const AngleProfile& a) {
  const RealTensor t = seed_tensor(s, a);
  double q = 0.0;
  for (double m : t.coeffs()) q += m * m;
  if (q < 1e-12) return kObjectiveSentinel;
  return local_bound_value(t) / q;
}

MinimizeResult nelder_mead_minimize(
    const std::function<double(std::span<const double>)>& f,
    std::span<const double> x0, const SearchConfig& config) {
  config.validate();
  const std::size_t n = x0.size();
  std::vector<std::vector<double>> pts(n + 1, std::vector<double>(x0.begin(), x0.end()));
  for (std::size_t k = 0; k < n; ++k) pts[k + 1][k] += config.initial_step;
  std::vector<double> fv(n + 1);
  MinimizeResult res;
  for (std::size_t v = 0; v <= n; ++v) fv[v] = f(pts[v]);
  res.evaluations = static_cast<int>(n + 1);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), xr(n), xe(n), xc(n);
  auto along = [&](std::vector<double>& out, double coef) {
    const auto& worst = pts[order[n]];
    for (std::size_t k = 0; k < n; ++k) {
      out[k] = centroid[k] + coef * (centroid[k] - worst[k]);
    }
  };

  int it = 0;
  for (; it < config.max_iterations; ++it) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    if (fv[order[n]] - fv[order[0]] < config.tolerance) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t k = 0; k < n; ++k) centroid[k] += pts[order[v]][k];
    for (double& c : centroid) c /= static_cast<double>(n);

    const double f_best = fv[order[0]];
    const double f_second = fv[order[n - 1]];
    const double f_worst = fv[order[n]];

    along(xr, config.reflection);
    const double fr = f(xr);
    ++res.evaluations;
    if (fr < f_best) {
      along(xe, config.reflection * config.expansion);
      const double fe = f(xe);
      ++res.evaluations;
      if (fe < fr) {
        pts[order[n]] = xe;
        fv[order[n]] = fe;
      } else {
        pts[order[n]] = xr;
        fv[order[n]] = fr;
      }
      continue;
    }
    if (fr < f_second) {
      pts[order[n]] = xr;
      fv[order[n]] = fr;
      continue;
    }
    // Outside contraction if the reflection beat the worst, inside otherwise.
    const bool outside = fr < f_worst;
    along(xc, outside ? config.reflection * config.contraction : -config.contraction);
    const double fc = f(xc);
    ++res.evaluations;
    if ((outside && fc <= fr) || (!outside && fc < f_worst)) {
      pts[order[n]] = xc;
      fv[order[n]] = fc;
      continue;
    }
    const auto& best = pts[order[0]];
    for (std::size_t v = 1; v <= n; ++v) {
      auto& p = pts[order[v]];
      for (std::size_t k = 0; k < n; ++k) p[k] = best[k] + config.shrink * (p[k] - best[k]);
      fv[order[v]] = f(p);
    }
    res.evaluations += static_cast<int>(n);
  }

  const auto best = static_cast<std::size_t>(
      std::min_element(fv.begin(), fv.end()) - fv.begin());
  res.x = pts[best];
  res.value = fv[best];
  res.iterations = it;
  return res;
}

DescentResult nelder_mead(const Scenario& s, const SearchConfig& config,
                          const AngleProfile& init) {
  init.require(s);
  const std::vector<double> x0 = init.flatten();
  auto f = [&](std::span<const double> x) {
    return objective(s, AngleProfile::unflatten(s, x));
  };
  const MinimizeResult r = nelder_mead_minimize(f, x0, config);
  DescentResult out;
  out.angles = AngleProfile::unflatten(s, r.x);
  out.value = r.value;
  out.initial_value = f(x0);
  out.iterations = r.iterations;
  return out;
}

AngleProfile random_angles(const Scenario& s, std::uint64_t seed,
                           std::uint64_t trial) {
  auto gen = substream(seed, trial);
  AngleProfile a;
  for (int p = 0; p < 3; ++p) {
    for (int n = 0; n < s.settings(p); ++n) a.phi[p].push_back(uniform_angle(gen));
  }
  return a;
}

}  // namespace ghzbell
