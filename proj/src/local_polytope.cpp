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

#include "ghzbell/local_polytope.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ghzbell {

namespace {

void require_budget(const Scenario& s) {
  if (s.total_settings() > kMaxTotalSettings) {
    throw ScenarioError("scenario " + s.to_string() +
                        " exceeds the vertex enumeration budget");
  }
}

int sign_of_bit(std::uint64_t bits, int pos) {
  return ((bits >> pos) & 1U) ? -1 : 1;
}

// Result of scanning all c for one fixed b.
template <class T>
struct BlockBest {
  T value{};
  std::uint32_t c_bits = 0;
};

// Bob's signs for b-block index `b_bits` (b_0 = +1 implied).
inline int bob_sign(std::uint32_t b_bits, int j) {
  return j == 0 ? 1 : sign_of_bit(b_bits, j - 1);
}

template <class T>
T abs_value(T v) {
  return v < T{} ? -v : v;
}

// For fixed Bob signs, maximises sum_i |sum_k N_ik c_k| over all c with a
// Gray-code walk: consecutive c differ in one sign, so each step is O(mA).
template <class T>
BlockBest<T> scan_block(const BellTensor<T>& t, std::uint32_t b_bits,
                        std::vector<T>& n, std::vector<T>& s) {
  const Scenario& sc = t.scenario();
  const int ma = sc.m_a(), mb = sc.m_b(), mc = sc.m_c();
  n.assign(static_cast<std::size_t>(ma) * mc, T{});
  for (int i = 0; i < ma; ++i) {
    for (int j = 0; j < mb; ++j) {
      const int bj = bob_sign(b_bits, j);
      const T* row = &t.coeffs()[sc.index(i, j, 0)];
      T* out = &n[static_cast<std::size_t>(i) * mc];
      for (int k = 0; k < mc; ++k) out[k] += bj > 0 ? row[k] : -row[k];
    }
  }
  s.assign(ma, T{});
  for (int i = 0; i < ma; ++i) {
    for (int k = 0; k < mc; ++k) s[i] += n[static_cast<std::size_t>(i) * mc + k];
  }
  BlockBest<T> best;
  best.value = T{};
  for (int i = 0; i < ma; ++i) best.value += abs_value(s[i]);
  best.c_bits = 0;

  std::uint32_t gray = 0;
  const std::uint32_t steps = 1U << mc;
  for (std::uint32_t g = 1; g < steps; ++g) {
    const int k = std::countr_zero(g);
    gray ^= 1U << k;
    const bool now_negative = (gray >> k) & 1U;
    T total{};
    for (int i = 0; i < ma; ++i) {
      const T d = n[static_cast<std::size_t>(i) * mc + k];
      s[i] += now_negative ? -(d + d) : (d + d);
      total += abs_value(s[i]);
    }
    if (total > best.value) {
      best.value = total;
      best.c_bits = gray;
    }
  }
  return best;
}

template <class T>
CorrelationVertex reconstruct(const BellTensor<T>& t, std::uint32_t b_bits,
                              std::uint32_t c_bits) {
  const Scenario& sc = t.scenario();
  std::array<std::vector<int>, 3> sign;
  sign[1].resize(sc.m_b());
  sign[2].resize(sc.m_c());
  for (int j = 0; j < sc.m_b(); ++j) sign[1][j] = bob_sign(b_bits, j);
  for (int k = 0; k < sc.m_c(); ++k) sign[2][k] = sign_of_bit(c_bits, k);
  sign[0].resize(sc.m_a());
  for (int i = 0; i < sc.m_a(); ++i) {
    T w{};
    for (int j = 0; j < sc.m_b(); ++j) {
      for (int k = 0; k < sc.m_c(); ++k) {
        const T m = t.at(i, j, k);
        w += sign[1][j] * sign[2][k] > 0 ? m : -m;
      }
    }
    sign[0][i] = w < T{} ? -1 : 1;
  }
  const std::int64_t idx = vertex_index(sc, sign);
  return vertex_at(sc, idx);
}

template <class T>
LocalBound<T> local_bound_impl(const BellTensor<T>& t, Exec exec) {
  const Scenario& sc = t.scenario();
  require_budget(sc);
  const std::int64_t blocks = std::int64_t{1} << (sc.m_b() - 1);
  std::vector<BlockBest<T>> per_block(blocks);

  if (exec == Exec::parallel) {
#pragma omp parallel
    {
      std::vector<T> n, s;
#pragma omp for schedule(static)
      for (std::int64_t b = 0; b < blocks; ++b) {
        per_block[b] = scan_block(t, static_cast<std::uint32_t>(b), n, s);
      }
    }
  } else {
    std::vector<T> n, s;
    for (std::int64_t b = 0; b < blocks; ++b) {
      per_block[b] = scan_block(t, static_cast<std::uint32_t>(b), n, s);
    }
  }

  std::int64_t best_b = 0;
  for (std::int64_t b = 1; b < blocks; ++b) {
    if (per_block[b].value > per_block[best_b].value) best_b = b;
  }
  LocalBound<T> out;
  out.value = per_block[best_b].value;
  out.argmax = reconstruct(t, static_cast<std::uint32_t>(best_b),
                           per_block[best_b].c_bits);
  return out;
}

}  // namespace

std::vector<int> CorrelationVertex::tensor() const {
  const int ma = static_cast<int>(sign[0].size());
  const int mb = static_cast<int>(sign[1].size());
  const int mc = static_cast<int>(sign[2].size());
  std::vector<int> out(static_cast<std::size_t>(ma) * mb * mc);
  std::size_t n = 0;
  for (int i = 0; i < ma; ++i)
    for (int j = 0; j < mb; ++j)
      for (int k = 0; k < mc; ++k) out[n++] = sign[0][i] * sign[1][j] * sign[2][k];
  return out;
}

CorrelationPoint CorrelationVertex::point(const Scenario& s) const {
  const auto t = tensor();
  return CorrelationPoint(s, std::vector<double>(t.begin(), t.end()));
}

CorrelationVertex vertex_at(const Scenario& s, std::int64_t index) {
  if (index < 0 || index >= s.vertex_count()) {
    throw ScenarioError("vertex index out of range");
  }
  const auto bits = static_cast<std::uint64_t>(index);
  CorrelationVertex v;
  v.index = index;
  int pos = 0;
  v.sign[0].push_back(1);
  for (int i = 1; i < s.m_a(); ++i) v.sign[0].push_back(sign_of_bit(bits, pos++));
  v.sign[1].push_back(1);
  for (int j = 1; j < s.m_b(); ++j) v.sign[1].push_back(sign_of_bit(bits, pos++));
  for (int k = 0; k < s.m_c(); ++k) v.sign[2].push_back(sign_of_bit(bits, pos++));
  return v;
}

std::int64_t vertex_index(const Scenario& s,
                          const std::array<std::vector<int>, 3>& sign_in) {
  for (int p = 0; p < 3; ++p) {
    if (static_cast<int>(sign_in[p].size()) != s.settings(p)) {
      throw ScenarioError("sign vector length mismatch");
    }
  }
  // Bring a_0 and b_0 to +1 by flipping a pair of parties.
  const int fa = sign_in[0][0] < 0 ? -1 : 1;
  const int fb = sign_in[1][0] < 0 ? -1 : 1;
  const int fc = fa * fb;
  std::uint64_t bits = 0;
  int pos = 0;
  for (int i = 1; i < s.m_a(); ++i, ++pos)
    if (sign_in[0][i] * fa < 0) bits |= std::uint64_t{1} << pos;
  for (int j = 1; j < s.m_b(); ++j, ++pos)
    if (sign_in[1][j] * fb < 0) bits |= std::uint64_t{1} << pos;
  for (int k = 0; k < s.m_c(); ++k, ++pos)
    if (sign_in[2][k] * fc < 0) bits |= std::uint64_t{1} << pos;
  return static_cast<std::int64_t>(bits);
}

std::vector<CorrelationVertex> enumerate_vertices(const Scenario& s) {
  require_budget(s);
  std::vector<CorrelationVertex> out;
  out.reserve(static_cast<std::size_t>(s.vertex_count()));
  for (std::int64_t v = 0; v < s.vertex_count(); ++v) out.push_back(vertex_at(s, v));
  return out;
}

std::vector<std::int8_t> vertex_matrix(const Scenario& s, Exec exec) {
  require_budget(s);
  const std::int64_t count = s.vertex_count();
  const int d = s.dim();
  std::vector<std::int8_t> m(static_cast<std::size_t>(count) * d);
  auto fill = [&](std::int64_t v) {
    const auto t = vertex_at(s, v).tensor();
    std::int8_t* row = &m[static_cast<std::size_t>(v) * d];
    for (int n = 0; n < d; ++n) row[n] = static_cast<std::int8_t>(t[n]);
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t v = 0; v < count; ++v) fill(v);
  } else {
    for (std::int64_t v = 0; v < count; ++v) fill(v);
  }
  return m;
}

LocalBound<std::int64_t> local_bound(const IntTensor& t, Exec exec) {
  return local_bound_impl(t, exec);
}

LocalBound<double> local_bound(const RealTensor& t, Exec exec) {
  return local_bound_impl(t, exec);
}

double local_bound_value(const RealTensor& t) {
  const Scenario& sc = t.scenario();
  require_budget(sc);
  thread_local std::vector<double> n, s;
  const std::uint32_t blocks = 1U << (sc.m_b() - 1);
  double best = 0.0;
  for (std::uint32_t b = 0; b < blocks; ++b) {
    const double v = scan_block(t, b, n, s).value;
    if (v > best) best = v;
  }
  return best;
}

Tightness check_tightness(const IntTensor& t, std::int64_t bound, Exec exec) {
  const Scenario& sc = t.scenario();
  require_budget(sc);
  const int ma = sc.m_a(), mb = sc.m_b(), mc = sc.m_c();
  const int d = sc.dim();
  // Vertex index = a_bits | bc_bits << (mA - 1); walk all bc blocks.
  const std::int64_t bc_blocks = std::int64_t{1} << (mb - 1 + mc);
  const std::int64_t a_count = std::int64_t{1} << (ma - 1);
  std::vector<std::vector<std::int64_t>> hits(bc_blocks);
  std::vector<std::int64_t> block_max(bc_blocks);

  auto scan = [&](std::int64_t bc) {
    std::vector<std::int64_t> w(ma, 0);
    const auto bits = static_cast<std::uint64_t>(bc);
    for (int i = 0; i < ma; ++i) {
      std::int64_t acc = 0;
      for (int j = 0; j < mb; ++j) {
        const int bj = j == 0 ? 1 : sign_of_bit(bits, j - 1);
        for (int k = 0; k < mc; ++k) {
          const int ck = sign_of_bit(bits, mb - 1 + k);
          acc += bj * ck * t.at(i, j, k);
        }
      }
      w[i] = acc;
    }
    std::int64_t mx = std::numeric_limits<std::int64_t>::min();
    for (std::int64_t a = 0; a < a_count; ++a) {
      std::int64_t v = w[0];
      for (int i = 1; i < ma; ++i) v += ((a >> (i - 1)) & 1) ? -w[i] : w[i];
      if (v > mx) mx = v;
      if (v == bound) hits[bc].push_back(a | (bc << (ma - 1)));
    }
    block_max[bc] = mx;
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t bc = 0; bc < bc_blocks; ++bc) scan(bc);
  } else {
    for (std::int64_t bc = 0; bc < bc_blocks; ++bc) scan(bc);
  }

  std::int64_t mx = block_max[0];
  for (std::int64_t v : block_max) mx = std::max(mx, v);
  if (mx != bound) {
    throw BoundError("claimed local bound " + std::to_string(bound) +
                     " differs from exact bound " + std::to_string(mx));
  }

  std::vector<std::int64_t> sat;
  for (const auto& h : hits) sat.insert(sat.end(), h.begin(), h.end());

  Tightness out;
  out.saturating_vertices = static_cast<std::int64_t>(sat.size());
  if (sat.empty()) return out;

  // Differences from the first saturating vertex, halved to {-1, 0, 1}.
  const auto base = vertex_at(sc, sat[0]).tensor();
  std::vector<std::int64_t> rows;
  rows.reserve((sat.size() - 1) * d);
  for (std::size_t r = 1; r < sat.size(); ++r) {
    const auto v = vertex_at(sc, sat[r]).tensor();
    for (int n = 0; n < d; ++n) rows.push_back((v[n] - base[n]) / 2);
  }
  int rank = detail::rank_mod_prime(rows, d, d);
  if (rank < d - 1) rank = detail::rank_exact(rows, d);
  out.saturation_rank = rank + 1;
  out.tight = out.saturation_rank == d;
  return out;
}

namespace detail {

int rank_mod_prime(std::span<const std::int64_t> rows, int cols, int stop_at) {
  constexpr std::uint64_t p = 2147483647ULL;  // 2^31 - 1
  auto reduce = [](std::int64_t v) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
  };
  auto inverse = [](std::uint64_t a) {
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  const std::size_t n_rows = rows.size() / static_cast<std::size_t>(cols);
  std::vector<std::vector<std::uint64_t>> basis;
  std::vector<int> pivot;
  std::vector<std::uint64_t> row(cols);
  for (std::size_t r = 0; r < n_rows; ++r) {
    for (int c = 0; c < cols; ++c) row[c] = reduce(rows[r * cols + c]);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::uint64_t f = row[pivot[b]];
      if (f == 0) continue;
      const auto& br = basis[b];
      for (int c = pivot[b]; c < cols; ++c) {
        row[c] = (row[c] + (p - f) * br[c]) % p;
      }
    }
    int lead = -1;
    for (int c = 0; c < cols; ++c) {
      if (row[c] != 0) {
        lead = c;
        break;
      }
    }
    if (lead < 0) continue;
    const std::uint64_t inv = inverse(row[lead]);
    for (int c = lead; c < cols; ++c) row[c] = row[c] * inv % p;
    basis.push_back(row);
    pivot.push_back(lead);
    if (stop_at >= 0 && static_cast<int>(basis.size()) >= stop_at) break;
  }
  return static_cast<int>(basis.size());
}

int rank_exact(std::span<const std::int64_t> rows, int cols) {
  using boost::multiprecision::cpp_int;
  const std::size_t n_rows = rows.size() / static_cast<std::size_t>(cols);
  std::vector<std::vector<cpp_int>> m(n_rows, std::vector<cpp_int>(cols));
  for (std::size_t r = 0; r < n_rows; ++r)
    for (int c = 0; c < cols; ++c) m[r][c] = rows[r * cols + c];

  std::size_t rank = 0;
  cpp_int prev = 1;
  for (int col = 0; col < cols && rank < n_rows; ++col) {
    std::size_t piv = rank;
    while (piv < n_rows && m[piv][col] == 0) ++piv;
    if (piv == n_rows) continue;
    std::swap(m[piv], m[rank]);
    const cpp_int& pv = m[rank][col];
    for (std::size_t r = rank + 1; r < n_rows; ++r) {
      const cpp_int f = m[r][col];
      for (int c = col + 1; c < cols; ++c) {
        m[r][c] = (pv * m[r][c] - f * m[rank][c]) / prev;
      }
      m[r][col] = 0;
    }
    prev = pv;
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace detail

}  // namespace ghzbell
