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

#pragma once

#include <cstdint>
#include <numbers>
#include <random>

namespace ghzbell {

/// Selects the OpenMP kernel or its serial reference. Both produce identical
/// results; the serial path is what nested callers (per-trial work) use.
enum class Exec { serial, parallel };

/// Independent generator for stream `stream` of a run seeded with `seed`.
/// Streams depend only on (seed, stream), never on scheduling.
inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t stream) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return std::mt19937_64(mix(mix(seed) ^ mix(stream + 0x5851f42d4c957f2dULL)));
}

/// Uniform double in [0, 1) from the top 53 bits; portable across stdlibs.
inline double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline double uniform_angle(std::mt19937_64& gen) {
  return 2.0 * std::numbers::pi * uniform01(gen);
}

}  // namespace ghzbell
