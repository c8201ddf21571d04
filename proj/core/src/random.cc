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

#include "coherework/random.h"

#include <cmath>
#include <numbers>

#include "coherework/errors.h"

namespace coherework {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

ComplexMatrix random_hermitian(Rng &rng, std::size_t dim) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix m(dim, dim);
    for (std::size_t r = 0; r < dim; r++) {
        m(r, r) = normal(rng);
        for (std::size_t c = r + 1; c < dim; c++) {
            Complex z{normal(rng), normal(rng)};
            z *= std::numbers::sqrt2 / 2.0;
            m(r, c) = z;
            m(c, r) = std::conj(z);
        }
    }
    return m;
}

ComplexMatrix random_unitary(Rng &rng, std::size_t dim) {
    auto sd = hermitian_eig(random_hermitian(rng, dim));
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::vector<Complex> phases;
    for (std::size_t k = 0; k < dim; k++) {
        // Random eigenphases make the spectrum uniform on the circle.
        phases.push_back(std::polar(1.0, angle(rng)));
    }
    return sd.recompose(phases);
}

DensityMatrix random_density_matrix(Rng &rng, std::size_t dim, std::size_t rank) {
    if (rank == 0 || rank > dim) {
        rank = dim;
    }
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix g(dim, rank);
    for (std::size_t r = 0; r < dim; r++) {
        for (std::size_t c = 0; c < rank; c++) {
            g(r, c) = Complex{normal(rng), normal(rng)};
        }
    }
    ComplexMatrix m = g * g.adjoint();
    m *= Complex{1.0 / m.trace().real(), 0.0};
    return DensityMatrix(m);
}

DensityMatrix random_pure_state(Rng &rng, std::size_t dim) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<Complex> psi(dim);
    for (auto &c : psi) {
        c = Complex{normal(rng), normal(rng)};
    }
    return DensityMatrix::pure(psi);
}

DensityMatrix bloch_state(double a, double theta, double phi) {
    if (!(a >= 0.0 && a <= 1.0)) {
        throw Error(ErrorKind::InvalidArgument, "bloch_state: a must lie in [0, 1]");
    }
    double r = 2.0 * a - 1.0;
    double x = r * std::sin(theta) * std::cos(phi);
    double y = r * std::sin(theta) * std::sin(phi);
    double z = r * std::cos(theta);
    auto m = ComplexMatrix::from_rows({
        {Complex{0.5 * (1.0 + z), 0.0}, Complex{0.5 * x, -0.5 * y}},
        {Complex{0.5 * x, 0.5 * y}, Complex{0.5 * (1.0 - z), 0.0}},
    });
    return DensityMatrix(m);
}

}  // namespace coherework
