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

// Quantum values of full-correlation expressions on the three-qubit GHZ
// state (|000> + |111>)/sqrt(2).
//
// With equatorial observables cos(phi) X + sin(phi) Y the GHZ correlator is
// cos(phi_A + phi_B + phi_C). White noise contributes nothing to any
// full-correlation term, so the noisy state at visibility v yields v times
// the pure-state value and the threshold visibility is L / Q.

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "ghzbell/exec.hpp"
#include "ghzbell/tensor.hpp"

namespace ghzbell {

/// Entry (i,j,k) = cos(phi^A_i + phi^B_j + phi^C_k).
CorrelationPoint ghz_point(const Scenario& s, const AngleProfile& a);

struct SeesawOptions {
  int restarts = 100;
  std::uint64_t seed = 0;
  /// Stop when one sweep improves the value by less than
  /// tolerance * max(1, |value|).
  double tolerance = 1e-12;
  int max_sweeps = 10000;
  Exec exec = Exec::parallel;
  /// Extra deterministic starting profiles, tried before the random ones.
  std::vector<AngleProfile> warm_starts;
};

struct QuantumCertificate {
  AngleProfile angles;
  /// Bell value at `angles`; a lower bound on the quantum maximum.
  double value = 0.0;
  int restarts_used = 0;
  bool converged = false;
};

/// Coordinate ascent over equatorial angles. Each setting update is exact:
/// with z = sum of the setting's coefficients times the other parties'
/// phasors, the optimal angle is -arg(z) and contributes |z|.
QuantumCertificate seesaw_equatorial(const RealTensor& t,
                                     const SeesawOptions& opt = {});
QuantumCertificate seesaw_equatorial(const IntTensor& t,
                                     const SeesawOptions& opt = {});

struct GeneralCertificate {
  double value = 0.0;
  std::array<std::complex<double>, 8> state{};
  /// Bloch direction of every observable, per party and setting.
  std::array<std::vector<std::array<double, 3>>, 3> directions;
  int restarts_used = 0;
  bool converged = false;
};

/// Alternating optimisation over an arbitrary pure three-qubit state and
/// arbitrary traceless +-1 valued qubit observables n . sigma.
GeneralCertificate seesaw_general(const RealTensor& t,
                                  const SeesawOptions& opt = {});
GeneralCertificate seesaw_general(const IntTensor& t,
                                  const SeesawOptions& opt = {});

/// Critical visibility L / Q.
double visibility(double local_bound, double quantum_value);

/// Bell value of the noisy GHZ state at visibility v: v * <t, ghz_point(a)>.
double noisy_value(const RealTensor& t, const AngleProfile& a, double v);
double noisy_value(const IntTensor& t, const AngleProfile& a, double v);

}  // namespace ghzbell
