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

#include "ghzbell/quantum.hpp"

#include <cmath>
#include <numbers>

#include "ghzbell/jacobi.hpp"

namespace ghzbell {

using cplx = std::complex<double>;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r;
}

bool improved_enough(double value, double previous, double tol) {
  return value - previous >= tol * std::max(1.0, std::abs(value));
}

// ---------------------------------------------------------------------------
// Equatorial ascent

struct EquatorialRun {
  std::array<std::vector<cplx>, 3> phasor;
  double value = -HUGE_VAL;
  bool converged = false;
};

EquatorialRun ascend_equatorial(const RealTensor& t, const AngleProfile& start,
                                const SeesawOptions& opt) {
  const Scenario& sc = t.scenario();
  const int ma = sc.m_a(), mb = sc.m_b(), mc = sc.m_c();
  EquatorialRun run;
  for (int p = 0; p < 3; ++p) {
    for (double phi : start.phi[p]) run.phasor[p].push_back(std::polar(1.0, phi));
  }
  auto& ea = run.phasor[0];
  auto& eb = run.phasor[1];
  auto& ec = run.phasor[2];
  std::vector<cplx> z;

  // e <- conj(z)/|z| maximises Re(e z); z == 0 keeps the current phasor.
  auto settle = [](cplx& e, cplx zz) {
    const double r = std::abs(zz);
    if (r > 0.0) e = std::conj(zz) / r;
  };

  double previous = -HUGE_VAL;
  for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
    z.assign(ma, cplx{});
    for (int i = 0; i < ma; ++i)
      for (int j = 0; j < mb; ++j) {
        cplx acc{};
        for (int k = 0; k < mc; ++k) acc += t.at(i, j, k) * ec[k];
        z[i] += acc * eb[j];
      }
    for (int i = 0; i < ma; ++i) settle(ea[i], z[i]);

    z.assign(mb, cplx{});
    for (int i = 0; i < ma; ++i)
      for (int j = 0; j < mb; ++j) {
        cplx acc{};
        for (int k = 0; k < mc; ++k) acc += t.at(i, j, k) * ec[k];
        z[j] += acc * ea[i];
      }
    for (int j = 0; j < mb; ++j) settle(eb[j], z[j]);

    z.assign(mc, cplx{});
    for (int i = 0; i < ma; ++i)
      for (int j = 0; j < mb; ++j) {
        const cplx ab = ea[i] * eb[j];
        for (int k = 0; k < mc; ++k) z[k] += t.at(i, j, k) * ab;
      }
    double value = 0.0;
    for (int k = 0; k < mc; ++k) {
      settle(ec[k], z[k]);
      value += std::abs(z[k]);
    }
    run.value = value;
    if (!improved_enough(value, previous, opt.tolerance)) {
      run.converged = true;
      break;
    }
    previous = value;
  }
  return run;
}

AngleProfile random_profile(const Scenario& s, std::mt19937_64& gen) {
  AngleProfile a;
  for (int p = 0; p < 3; ++p) {
    for (int n = 0; n < s.settings(p); ++n) a.phi[p].push_back(uniform_angle(gen));
  }
  return a;
}

// Runs `count` independent jobs and returns the index of the best result
// (highest value, lowest index on ties) regardless of scheduling.
template <class Run, class Job>
std::size_t run_all(std::vector<Run>& runs, Exec exec, Job job) {
  const auto count = static_cast<std::int64_t>(runs.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t r = 0; r < count; ++r) runs[r] = job(r);
  } else {
    for (std::int64_t r = 0; r < count; ++r) runs[r] = job(r);
  }
  std::size_t best = 0;
  for (std::size_t r = 1; r < runs.size(); ++r) {
    if (runs[r].value > runs[best].value) best = r;
  }
  return best;
}

// ---------------------------------------------------------------------------
// General three-qubit see-saw

using Mat8 = std::array<cplx, 64>;

// Pauli products sigma_a (x) sigma_b (x) sigma_c, index 9a + 3b + c with
// 0 = X, 1 = Y, 2 = Z; basis index 4 x_A + 2 x_B + x_C.
const std::array<Mat8, 27>& pauli_products() {
  static const std::array<Mat8, 27> table = [] {
    const std::array<std::array<cplx, 4>, 3> pauli{{
        {cplx{0, 0}, cplx{1, 0}, cplx{1, 0}, cplx{0, 0}},
        {cplx{0, 0}, cplx{0, -1}, cplx{0, 1}, cplx{0, 0}},
        {cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{-1, 0}},
    }};
    std::array<Mat8, 27> out{};
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) {
          Mat8& m = out[9 * a + 3 * b + c];
          for (int r = 0; r < 8; ++r)
            for (int col = 0; col < 8; ++col) {
              m[r * 8 + col] = pauli[a][((r >> 2) & 1) * 2 + ((col >> 2) & 1)] *
                               pauli[b][((r >> 1) & 1) * 2 + ((col >> 1) & 1)] *
                               pauli[c][(r & 1) * 2 + (col & 1)];
            }
        }
    return out;
  }();
  return table;
}

using Dir = std::array<double, 3>;

struct GeneralRun {
  double value = -HUGE_VAL;
  std::array<cplx, 8> state{};
  std::array<std::vector<Dir>, 3> dirs;
  bool converged = false;
};

Dir random_direction(std::mt19937_64& gen) {
  const double z = 2.0 * uniform01(gen) - 1.0;
  const double phi = uniform_angle(gen);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {r * std::cos(phi), r * std::sin(phi), z};
}

GeneralRun ascend_general(const RealTensor& t, std::mt19937_64& gen,
                          const SeesawOptions& opt) {
  const Scenario& sc = t.scenario();
  const auto& paulis = pauli_products();
  GeneralRun run;
  {
    double norm = 0.0;
    for (auto& amp : run.state) {
      // Box-Muller pair for a complex Gaussian amplitude.
      const double u1 = 1.0 - uniform01(gen), u2 = uniform01(gen);
      const double rad = std::sqrt(-2.0 * std::log(u1));
      amp = std::polar(rad, 2.0 * std::numbers::pi * u2);
      norm += std::norm(amp);
    }
    for (auto& amp : run.state) amp /= std::sqrt(norm);
  }
  for (int p = 0; p < 3; ++p) {
    for (int n = 0; n < sc.settings(p); ++n) run.dirs[p].push_back(random_direction(gen));
  }

  std::array<double, 27> corr{};
  auto refresh_correlations = [&] {
    for (int q = 0; q < 27; ++q) {
      cplx acc{};
      const Mat8& m = paulis[q];
      for (int r = 0; r < 8; ++r) {
        cplx row{};
        for (int c = 0; c < 8; ++c) row += m[r * 8 + c] * run.state[c];
        acc += std::conj(run.state[r]) * row;
      }
      corr[q] = acc.real();
    }
  };

  // Re-aim every observable of party p along its effective Bloch vector.
  auto update_party = [&](int p) {
    const int q1 = p == 0 ? 1 : 0;
    const int q2 = p == 2 ? 1 : 2;
    auto corr_at = [&](int own, int x, int y) {
      std::array<int, 3> ax{};
      ax[p] = own;
      ax[q1] = x;
      ax[q2] = y;
      return corr[9 * ax[0] + 3 * ax[1] + ax[2]];
    };
    for (int s = 0; s < sc.settings(p); ++s) {
      Dir r{0.0, 0.0, 0.0};
      for (int u = 0; u < sc.settings(q1); ++u) {
        for (int w = 0; w < sc.settings(q2); ++w) {
          std::array<int, 3> idx{};
          idx[p] = s;
          idx[q1] = u;
          idx[q2] = w;
          const double m = t.at(idx[0], idx[1], idx[2]);
          if (m == 0.0) continue;
          const Dir& du = run.dirs[q1][u];
          const Dir& dw = run.dirs[q2][w];
          for (int own = 0; own < 3; ++own) {
            double acc = 0.0;
            for (int x = 0; x < 3; ++x)
              for (int y = 0; y < 3; ++y) acc += corr_at(own, x, y) * du[x] * dw[y];
            r[own] += m * acc;
          }
        }
      }
      const double len = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
      if (len > 0.0) run.dirs[p][s] = {r[0] / len, r[1] / len, r[2] / len};
    }
  };

  double previous = -HUGE_VAL;
  Mat8 bell{};
  for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
    refresh_correlations();
    for (int p = 0; p < 3; ++p) update_party(p);

    std::array<double, 27> w{};
    for (int i = 0; i < sc.m_a(); ++i)
      for (int j = 0; j < sc.m_b(); ++j)
        for (int k = 0; k < sc.m_c(); ++k) {
          const double m = t.at(i, j, k);
          if (m == 0.0) continue;
          const Dir& a = run.dirs[0][i];
          const Dir& b = run.dirs[1][j];
          const Dir& c = run.dirs[2][k];
          for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y)
              for (int z = 0; z < 3; ++z) w[9 * x + 3 * y + z] += m * a[x] * b[y] * c[z];
        }
    bell.fill(cplx{});
    for (int q = 0; q < 27; ++q) {
      if (w[q] == 0.0) continue;
      for (int e = 0; e < 64; ++e) bell[e] += w[q] * paulis[q][e];
    }
    const HermitianTop top = principal_eigenpair(bell, 8);
    for (int e = 0; e < 8; ++e) run.state[e] = top.vector[e];
    run.value = top.value;
    if (!improved_enough(top.value, previous, opt.tolerance)) {
      run.converged = true;
      break;
    }
    previous = top.value;
  }
  return run;
}

}  // namespace

CorrelationPoint ghz_point(const Scenario& s, const AngleProfile& a) {
  a.require(s);
  std::vector<double> v(s.dim());
  for (int i = 0; i < s.m_a(); ++i)
    for (int j = 0; j < s.m_b(); ++j)
      for (int k = 0; k < s.m_c(); ++k)
        v[s.index(i, j, k)] = std::cos(a.phi[0][i] + a.phi[1][j] + a.phi[2][k]);
  return CorrelationPoint(s, std::move(v));
}

QuantumCertificate seesaw_equatorial(const RealTensor& t,
                                     const SeesawOptions& opt) {
  if (opt.restarts < 1) throw DomainError("see-saw needs at least one restart");
  const Scenario& sc = t.scenario();
  for (const auto& w : opt.warm_starts) w.require(sc);
  const std::size_t warm = opt.warm_starts.size();
  std::vector<EquatorialRun> runs(warm + static_cast<std::size_t>(opt.restarts));
  const std::size_t best = run_all(runs, opt.exec, [&](std::int64_t r) {
    if (static_cast<std::size_t>(r) < warm) {
      return ascend_equatorial(t, opt.warm_starts[r], opt);
    }
    auto gen = substream(opt.seed, static_cast<std::uint64_t>(r) - warm);
    return ascend_equatorial(t, random_profile(sc, gen), opt);
  });

  QuantumCertificate cert;
  for (int p = 0; p < 3; ++p) {
    for (const cplx& e : runs[best].phasor[p]) {
      cert.angles.phi[p].push_back(wrap_angle(std::arg(e)));
    }
  }
  cert.value = dot(t, ghz_point(sc, cert.angles).values());
  cert.restarts_used = static_cast<int>(runs.size());
  cert.converged = runs[best].converged;
  return cert;
}

QuantumCertificate seesaw_equatorial(const IntTensor& t,
                                     const SeesawOptions& opt) {
  return seesaw_equatorial(to_real(t), opt);
}

GeneralCertificate seesaw_general(const RealTensor& t, const SeesawOptions& opt) {
  if (opt.restarts < 1) throw DomainError("see-saw needs at least one restart");
  std::vector<GeneralRun> runs(static_cast<std::size_t>(opt.restarts));
  const std::size_t best = run_all(runs, opt.exec, [&](std::int64_t r) {
    auto gen = substream(opt.seed ^ 0x6a09e667f3bcc909ULL,
                         static_cast<std::uint64_t>(r));
    return ascend_general(t, gen, opt);
  });
  GeneralCertificate cert;
  cert.value = runs[best].value;
  cert.state = runs[best].state;
  cert.directions = runs[best].dirs;
  cert.restarts_used = opt.restarts;
  cert.converged = runs[best].converged;
  return cert;
}

GeneralCertificate seesaw_general(const IntTensor& t, const SeesawOptions& opt) {
  return seesaw_general(to_real(t), opt);
}

double visibility(double local_bound, double quantum_value) {
  if (!(quantum_value > 0.0)) {
    throw DomainError("visibility needs a positive quantum value");
  }
  return local_bound / quantum_value;
}

double noisy_value(const RealTensor& t, const AngleProfile& a, double v) {
  if (!(v >= 0.0 && v <= 1.0)) throw DomainError("visibility outside [0, 1]");
  return v * evaluate(t, ghz_point(t.scenario(), a));
}

double noisy_value(const IntTensor& t, const AngleProfile& a, double v) {
  return noisy_value(to_real(t), a, v);
}

}  // namespace ghzbell
