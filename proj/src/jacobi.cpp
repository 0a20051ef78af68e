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

#include "ghzbell/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ghzbell {

SymmetricEigen jacobi_eigen(std::vector<double> a, int n, double tol) {
  auto at = [&](int r, int c) -> double& { return a[r * n + c]; };
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;

  double total = 0.0;
  for (double x : a) total += x * x;
  const double threshold = tol * tol * std::max(total, 1e-300);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += 2.0 * at(p, q) * at(p, q);
    if (off <= threshold) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v[k * n + p], vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return at(x, x) < at(y, y); });
  SymmetricEigen out;
  out.values.resize(n);
  out.vectors.resize(static_cast<std::size_t>(n) * n);
  for (int c = 0; c < n; ++c) {
    out.values[c] = at(order[c], order[c]);
    for (int r = 0; r < n; ++r) out.vectors[r * n + c] = v[r * n + order[c]];
  }
  return out;
}

HermitianTop principal_eigenpair(std::span<const std::complex<double>> h,
                                 int n) {
  const int m = 2 * n;
  std::vector<double> real(static_cast<std::size_t>(m) * m);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const auto z = h[r * n + c];
      real[r * m + c] = z.real();
      real[r * m + c + n] = -z.imag();
      real[(r + n) * m + c] = z.imag();
      real[(r + n) * m + c + n] = z.real();
    }
  }
  const SymmetricEigen e = jacobi_eigen(std::move(real), m);
  HermitianTop out;
  out.value = e.values[m - 1];
  out.vector.resize(n);
  double norm = 0.0;
  for (int r = 0; r < n; ++r) {
    out.vector[r] = {e.vectors[r * m + (m - 1)], e.vectors[(r + n) * m + (m - 1)]};
    norm += std::norm(out.vector[r]);
  }
  norm = std::sqrt(norm);
  for (auto& z : out.vector) z /= norm;
  return out;
}

}  // namespace ghzbell
