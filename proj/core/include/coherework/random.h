// Copyright 2026 The coherework Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COHEREWORK_RANDOM_H
#define COHEREWORK_RANDOM_H

#include <cstddef>
#include <cstdint>
#include <random>

#include "coherework/linalg.h"
#include "coherework/states.h"

namespace coherework {

/// All randomized constructors draw from this engine. Its output sequence is
/// fixed by the standard; the std distributions layered on top are stable for a
/// given standard library build.
using Rng = std::mt19937_64;

/// Deterministic child seed for stream `index` of a master seed (splitmix64).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// GUE-style Hermitian matrix with unit-variance Gaussian entries.
ComplexMatrix random_hermitian(Rng &rng, std::size_t dim);

/// exp(i G) for a random Hermitian generator G scaled to cover the group.
ComplexMatrix random_unitary(Rng &rng, std::size_t dim);

/// Normalized Ginibre state G G^dagger / tr; `rank` columns of G (0 = full).
DensityMatrix random_density_matrix(Rng &rng, std::size_t dim, std::size_t rank = 0);

DensityMatrix random_pure_state(Rng &rng, std::size_t dim);

/// Qubit state a |n><n| + (1 - a) |-n><-n| with Bloch direction
/// n = (sin(theta) cos(phi), sin(theta) sin(phi), cos(theta)).
DensityMatrix bloch_state(double a, double theta, double phi = 0.0);

}  // namespace coherework

#endif
