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

#include "ghzbell/facet_lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ghzbell {

namespace {

// Gauss-Jordan inverse with partial pivoting; false if numerically singular.
bool invert(std::vector<double> a, int m, std::vector<double>& inv) {
  inv.assign(static_cast<std::size_t>(m) * m, 0.0);
  for (int i = 0; i < m; ++i) inv[i * m + i] = 1.0;
  for (int col = 0; col < m; ++col) {
    int piv = col;
    for (int r = col + 1; r < m; ++r) {
      if (std::abs(a[r * m + col]) > std::abs(a[piv * m + col])) piv = r;
    }
    if (std::abs(a[piv * m + col]) < 1e-12) return false;
    if (piv != col) {
      for (int c = 0; c < m; ++c) {
        std::swap(a[piv * m + c], a[col * m + c]);
        std::swap(inv[piv * m + c], inv[col * m + c]);
      }
    }
    const double d = a[col * m + col];
    for (int c = 0; c < m; ++c) {
      a[col * m + c] /= d;
      inv[col * m + c] /= d;
    }
    for (int r = 0; r < m; ++r) {
      if (r == col) continue;
      const double f = a[r * m + col];
      if (f == 0.0) continue;
      for (int c = 0; c < m; ++c) {
        a[r * m + c] -= f * a[col * m + c];
        inv[r * m + c] -= f * inv[col * m + c];
      }
    }
  }
  return true;
}

std::vector<double> vertex_column(const Scenario& s, std::int64_t idx) {
  const auto t = vertex_at(s, idx).tensor();
  return std::vector<double>(t.begin(), t.end());
}

std::int64_t negated_vertex(const Scenario& s, std::int64_t idx) {
  auto v = vertex_at(s, idx);
  for (int& x : v.sign[0]) x = -x;
  return vertex_index(s, v.sign);
}

// Kronecker product of per-party bases {1, 1 - 2 e_r}: d independent vertices.
std::vector<std::int64_t> product_basis(const Scenario& s) {
  std::vector<std::int64_t> cols;
  std::array<std::vector<int>, 3> sign;
  for (int ra = 0; ra < s.m_a(); ++ra)
    for (int rb = 0; rb < s.m_b(); ++rb)
      for (int rc = 0; rc < s.m_c(); ++rc) {
        const std::array<int, 3> r{ra, rb, rc};
        for (int p = 0; p < 3; ++p) {
          sign[p].assign(s.settings(p), 1);
          if (r[p] > 0) sign[p][r[p]] = -1;
        }
        cols.push_back(vertex_index(s, sign));
      }
  return cols;
}

class RevisedSimplex {
 public:
  RevisedSimplex(const RealTensor& g, const FacetOptions& opt)
      : s_(g.scenario()), m_(s_.dim()), g_(g.coeffs().begin(), g.coeffs().end()), opt_(opt) {}

  PolarSolution solve() {
    cols_ = product_basis(s_);
    refactor();
    for (int r = 0; r < m_; ++r) {
      if (y_[r] < 0.0) {
        cols_[r] = negated_vertex(s_, cols_[r]);
        for (int c = 0; c < m_; ++c) inv_[r * m_ + c] = -inv_[r * m_ + c];
        y_[r] = -y_[r];
      }
    }

    PolarSolution sol;
    int degenerate_streak = 0;
    bool bland = false;
    int since_refactor = 0;
    while (true) {
      const std::vector<double> pi = multipliers();
      std::int64_t entering = -1;
      if (bland) {
        entering = first_violated(pi);
      } else {
        const auto lb = local_bound(RealTensor(s_, pi), Exec::serial);
        if (lb.value > 1.0 + opt_.feasibility_tol) entering = lb.argmax.index;
      }
      if (entering < 0) {
        sol.normal = pi;
        break;
      }
      if (sol.pivots >= opt_.max_pivots) {
        throw LpError("polar LP exceeded " + std::to_string(opt_.max_pivots) + " pivots");
      }

      const std::vector<double> a = vertex_column(s_, entering);
      std::vector<double> u(m_, 0.0);
      for (int r = 0; r < m_; ++r) {
        double acc = 0.0;
        for (int c = 0; c < m_; ++c) acc += inv_[r * m_ + c] * a[c];
        u[r] = acc;
      }
      int leave = -1;
      double theta = HUGE_VAL;
      for (int r = 0; r < m_; ++r) {
        if (u[r] <= 1e-9) continue;
        const double ratio = y_[r] / u[r];
        const bool tie = leave >= 0 && std::abs(ratio - theta) <= 1e-12 * std::max(1.0, theta);
        if (tie ? cols_[r] < cols_[leave] : ratio < theta) {
          if (!tie) theta = ratio;
          leave = r;
        }
      }
      if (leave < 0) {
        throw LpError("polar LP unbounded; the vertex set does not span the space");
      }
      theta = std::max(theta, 0.0);

      for (int r = 0; r < m_; ++r) y_[r] -= theta * u[r];
      y_[leave] = theta;
      const double piv = u[leave];
      for (int c = 0; c < m_; ++c) inv_[leave * m_ + c] /= piv;
      for (int r = 0; r < m_; ++r) {
        if (r == leave || u[r] == 0.0) continue;
        const double f = u[r];
        for (int c = 0; c < m_; ++c) inv_[r * m_ + c] -= f * inv_[leave * m_ + c];
      }
      cols_[leave] = entering;
      ++sol.pivots;
      if (bland) ++sol.bland_pivots;

      if (theta <= 1e-12) {
        if (++degenerate_streak >= opt_.degenerate_limit) bland = true;
      } else {
        degenerate_streak = 0;
        bland = false;
      }
      if (++since_refactor >= opt_.refactor_interval) {
        refactor();
        since_refactor = 0;
      }
    }
    sol.value = std::inner_product(g_.begin(), g_.end(), sol.normal.begin(), 0.0);
    sol.basis = cols_;
    return sol;
  }

 private:
  void refactor() {
    std::vector<double> b(static_cast<std::size_t>(m_) * m_);
    for (int c = 0; c < m_; ++c) {
      const auto col = vertex_column(s_, cols_[c]);
      for (int r = 0; r < m_; ++r) b[r * m_ + c] = col[r];
    }
    if (!invert(std::move(b), m_, inv_)) throw LpError("singular simplex basis");
    y_.assign(m_, 0.0);
    for (int r = 0; r < m_; ++r) {
      double acc = 0.0;
      for (int c = 0; c < m_; ++c) acc += inv_[r * m_ + c] * g_[c];
      y_[r] = acc;
    }
    for (double& v : y_) {
      if (v < 0.0 && v > -1e-9) v = 0.0;
    }
  }

  // pi = 1^T B^{-1}
  std::vector<double> multipliers() const {
    std::vector<double> pi(m_, 0.0);
    for (int r = 0; r < m_; ++r)
      for (int c = 0; c < m_; ++c) pi[c] += inv_[r * m_ + c];
    return pi;
  }

  std::int64_t first_violated(const std::vector<double>& pi) const {
    for (std::int64_t v = 0; v < s_.vertex_count(); ++v) {
      const auto t = vertex_at(s_, v).tensor();
      double acc = 0.0;
      for (int n = 0; n < m_; ++n) acc += pi[n] * t[n];
      if (acc > 1.0 + opt_.feasibility_tol) return v;
    }
    return -1;
  }

  Scenario s_;
  int m_;
  std::vector<double> g_;
  FacetOptions opt_;
  std::vector<std::int64_t> cols_;
  std::vector<double> inv_;
  std::vector<double> y_;
};

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

bool reconstruct(double x, std::int64_t max_den, double tol, Fraction& out) {
  // Convergents h/k of the continued fraction of x.
  std::int64_t h_prev = 1, h = static_cast<std::int64_t>(std::floor(x));
  std::int64_t k_prev = 0, k = 1;
  double rest = x - std::floor(x);
  for (int iter = 0; iter < 64; ++iter) {
    if (std::abs(x - static_cast<double>(h) / static_cast<double>(k)) <= tol) {
      out = {h, k};
      return true;
    }
    if (rest < 1e-300) break;
    const double inv = 1.0 / rest;
    const double a = std::floor(inv);
    if (a > 1e15) break;
    rest = inv - a;
    const auto ai = static_cast<std::int64_t>(a);
    const std::int64_t h_next = ai * h + h_prev;
    const std::int64_t k_next = ai * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return false;
}

bool try_integerize(std::span<const double> c, double unit, std::int64_t max_den,
                    std::vector<std::int64_t>& out) {
  double max_abs = 0.0;
  for (double v : c) max_abs = std::max(max_abs, std::abs(v));
  const double zero = 1e-9 * max_abs;
  std::vector<double> x(c.size());
  double x_max = 0.0;
  for (std::size_t n = 0; n < c.size(); ++n) {
    x[n] = std::abs(c[n]) <= zero ? 0.0 : c[n] / unit;
    x_max = std::max(x_max, std::abs(x[n]));
  }
  const double tol = 1e-10 * std::max(1.0, x_max);
  std::vector<Fraction> fr(c.size());
  __int128 lcm = 1;
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (x[n] == 0.0) continue;
    if (!reconstruct(x[n], max_den, tol, fr[n])) return false;
    const std::int64_t g = std::gcd(static_cast<std::int64_t>(lcm), fr[n].den);
    lcm = lcm / g * fr[n].den;
    if (lcm > (__int128{1} << 50)) return false;
  }
  std::vector<__int128> ints(c.size(), 0);
  std::int64_t content = 0;
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (x[n] == 0.0) continue;
    ints[n] = static_cast<__int128>(fr[n].num) * (lcm / fr[n].den);
    if (ints[n] > (__int128{1} << 62) || ints[n] < -(__int128{1} << 62)) return false;
    content = std::gcd(content, static_cast<std::int64_t>(ints[n]));
  }
  if (content == 0) return false;
  out.assign(c.size(), 0);
  for (std::size_t n = 0; n < c.size(); ++n) {
    out[n] = static_cast<std::int64_t>(ints[n] / content);
  }
  // out ~= scale * c with the least-squares scale; every entry must agree.
  double tc = 0.0, cc = 0.0;
  for (std::size_t n = 0; n < c.size(); ++n) {
    tc += static_cast<double>(out[n]) * c[n];
    cc += c[n] * c[n];
  }
  const double scale = tc / cc;
  if (!(scale > 0.0)) return false;
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (std::abs(static_cast<double>(out[n]) - scale * c[n]) > 1e-6 * scale) return false;
  }
  return true;
}

// Exact solution of B^T c = 1 for the optimal basis, scaled to coprime
// integers. Used when the floating-point normal does not round cleanly.
std::optional<std::vector<std::int64_t>> exact_normal(const Scenario& s,
                                                      std::span<const std::int64_t> basis) {
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::cpp_rational;
  const int m = s.dim();
  std::vector<std::vector<cpp_int>> a(m, std::vector<cpp_int>(m + 1, 1));
  for (int r = 0; r < m; ++r) {
    const auto t = vertex_at(s, basis[r]).tensor();
    for (int c = 0; c < m; ++c) a[r][c] = t[c];
  }
  cpp_int prev = 1;
  for (int k = 0; k < m; ++k) {
    int piv = k;
    while (piv < m && a[piv][k] == 0) ++piv;
    if (piv == m) return std::nullopt;
    std::swap(a[piv], a[k]);
    for (int i = k + 1; i < m; ++i) {
      for (int j = k + 1; j <= m; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  std::vector<cpp_rational> x(m);
  for (int i = m - 1; i >= 0; --i) {
    cpp_rational acc = cpp_rational(a[i][m]);
    for (int j = i + 1; j < m; ++j) acc -= cpp_rational(a[i][j]) * x[j];
    x[i] = acc / cpp_rational(a[i][i]);
  }
  cpp_int lcm = 1;
  for (const auto& v : x) {
    const cpp_int d = boost::multiprecision::denominator(v);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  std::vector<cpp_int> ints(m);
  cpp_int g = 0;
  for (int i = 0; i < m; ++i) {
    ints[i] = boost::multiprecision::numerator(x[i]) * (lcm / boost::multiprecision::denominator(x[i]));
    g = boost::multiprecision::gcd(g, ints[i]);
  }
  if (g == 0) return std::nullopt;
  const cpp_int limit = cpp_int(std::numeric_limits<std::int64_t>::max());
  std::vector<std::int64_t> out(m);
  for (int i = 0; i < m; ++i) {
    const cpp_int v = ints[i] / g;
    if (abs(v) > limit) return std::nullopt;
    out[i] = static_cast<std::int64_t>(v);
  }
  return out;
}

}  // namespace

PolarSolution solve_polar_lp(const RealTensor& g, const FacetOptions& opt) {
  if (g.is_zero()) throw DomainError("facet search needs a nonzero direction");
  if (g.scenario().total_settings() > kMaxTotalSettings) {
    throw ScenarioError("scenario exceeds the vertex enumeration budget");
  }
  return RevisedSimplex(g, opt).solve();
}

std::vector<std::int64_t> integerize(std::span<const double> c,
                                     std::int64_t max_denominator) {
  double max_abs = 0.0, min_abs = HUGE_VAL;
  for (double v : c) max_abs = std::max(max_abs, std::abs(v));
  if (!(max_abs > 0.0)) throw DomainError("cannot integerise a zero vector");
  for (double v : c) {
    if (std::abs(v) > 1e-9 * max_abs) min_abs = std::min(min_abs, std::abs(v));
  }
  std::vector<std::int64_t> out;
  for (double unit : {1.0, min_abs, max_abs}) {
    if (try_integerize(c, unit, max_denominator, out)) return out;
  }
  throw IntegerizeError("no rational reconstruction with denominator <= " +
                        std::to_string(max_denominator));
}

IntTensor integerize(const RealTensor& c, std::int64_t max_denominator) {
  return IntTensor(c.scenario(), integerize(c.coeffs(), max_denominator));
}

FacetResult find_facet(const RealTensor& g, const FacetOptions& opt) {
  const PolarSolution sol = solve_polar_lp(g, opt);
  FacetResult out;
  out.normal = sol.normal;
  out.ray_gauge = sol.value;
  out.pivots = sol.pivots;
  try {
    out.facet = IntTensor(g.scenario(), integerize(sol.normal, opt.max_denominator));
  } catch (const IntegerizeError&) {
    auto exact = exact_normal(g.scenario(), sol.basis);
    if (!exact) throw;
    out.facet = IntTensor(g.scenario(), std::move(*exact));
    out.exact_fallback = true;
  }

  double tc = 0.0, cc = 0.0;
  for (int n = 0; n < out.facet.size(); ++n) {
    tc += static_cast<double>(out.facet[n]) * sol.normal[n];
    cc += sol.normal[n] * sol.normal[n];
  }
  out.scale = tc / cc;

  out.local_bound = local_bound(out.facet, Exec::serial).value;
  if (std::abs(static_cast<double>(out.local_bound) - out.scale) > 1e-6 * out.scale) {
    throw VerificationError("integer facet bound " + std::to_string(out.local_bound) +
                            " disagrees with LP scale " + std::to_string(out.scale));
  }
  out.tightness = check_tightness(out.facet, out.local_bound, Exec::serial);
  if (!out.tightness.tight) {
    throw VerificationError("rounded facet is not tight (affine rank " +
                            std::to_string(out.tightness.saturation_rank) + " of " +
                            std::to_string(g.scenario().dim()) + ")");
  }
  return out;
}

}  // namespace ghzbell
