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

// Small dense eigensolvers used by the general see-saw.

#pragma once

#include <complex>
#include <span>
#include <vector>

namespace ghzbell {

struct SymmetricEigen {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // column k (row-major n x n) pairs values[k]
};

/// Cyclic Jacobi rotations on a real symmetric row-major n x n matrix until
/// the off-diagonal Frobenius norm drops below `tol` times the matrix norm.
SymmetricEigen jacobi_eigen(std::vector<double> a, int n, double tol = 1e-12);

struct HermitianTop {
  double value = 0.0;
  std::vector<std::complex<double>> vector;  // unit norm
};

/// Largest eigenvalue and a unit eigenvector of a Hermitian row-major n x n
/// matrix, via the real symmetric embedding [[Re, -Im], [Im, Re]].
HermitianTop principal_eigenpair(std::span<const std::complex<double>> h, int n);

}  // namespace ghzbell
