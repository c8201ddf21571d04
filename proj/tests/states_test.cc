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

#include "coherework/states.h"

#include <limits>

#include "coherework/errors.h"
#include "coherework/random.h"
#include "test_util.h"

using namespace coherework;
using namespace coherework::testing;

TEST(temperature, validates) {
    EXPECT_EQ(Temperature(2.0).kt(), 0.5);
    EXPECT_THROW(Temperature(0.0), Error);
    EXPECT_THROW(Temperature(-1.0), Error);
    EXPECT_THROW(Temperature(std::numeric_limits<double>::infinity()), Error);
}

TEST(density_matrix, rejects_bad_trace_with_named_message) {
    auto m = ComplexMatrix::diagonal(std::vector<double>{0.5, 0.4});
    try {
        DensityMatrix rho(m);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidState);
        EXPECT_NE(std::string(e.what()).find("DensityMatrix: trace"), std::string::npos);
    }
}

TEST(density_matrix, rejects_negative_and_non_hermitian) {
    EXPECT_THROW(DensityMatrix(ComplexMatrix::diagonal(std::vector<double>{1.5, -0.5})), Error);
    EXPECT_THROW(DensityMatrix(ComplexMatrix::from_rows({{0.5, 0.1}, {0.0, 0.5}})), Error);
    EXPECT_THROW(DensityMatrix(ComplexMatrix(2, 3)), Error);
}

TEST(density_matrix, constructors) {
    auto mixed = DensityMatrix::maximally_mixed(4);
    EXPECT_NEAR(von_neumann_entropy(mixed), std::log(4.0), 1e-14);
    std::vector<Complex> plus{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
    auto pure = DensityMatrix::pure(plus);
    EXPECT_NEAR(von_neumann_entropy(pure), 0.0, 1e-14);
    EXPECT_NEAR(pure.matrix()(0, 1).real(), 0.5, 1e-15);
}

TEST(entropy, examples) {
    EXPECT_NEAR(shannon_entropy(std::vector<double>{0.25, 0.75}), 0.5623351446188083, 1e-15);
    auto rho = DensityMatrix(ComplexMatrix::diagonal(std::vector<double>{0.25, 0.75}));
    EXPECT_NEAR(von_neumann_entropy(rho), 0.5623351446188083, 1e-14);
    EXPECT_NEAR(von_neumann_entropy(bloch_state(0.8, kPi / 3)), binary_entropy(0.8), 1e-14);
}

TEST(entropy, unitary_invariance) {
    Rng rng(11);
    for (int i = 0; i < 50; i++) {
        auto rho = random_density_matrix(rng, 5);
        auto u = random_unitary(rng, 5);
        DensityMatrix rotated(u * rho.matrix() * u.adjoint());
        EXPECT_NEAR(von_neumann_entropy(rho), von_neumann_entropy(rotated), 1e-11);
    }
}

TEST(hamiltonian, clusters_degenerate_levels) {
    Rng rng(4);
    auto u = random_unitary(rng, 4);
    auto h = Hamiltonian::from_basis(u, std::vector<double>{1.0, -1.0, 1.0, 3.0});
    ASSERT_EQ(h.levels().size(), 3u);
    EXPECT_NEAR(h.levels()[0].energy, -1.0, 1e-12);
    EXPECT_EQ(h.levels()[1].rank(), 2u);
    EXPECT_NEAR(h.min_energy(), -1.0, 1e-12);
    EXPECT_NEAR(h.max_energy(), 3.0, 1e-12);
    ComplexMatrix sum(4, 4);
    for (const auto &level : h.levels()) {
        sum += level.projector;
    }
    EXPECT_TRUE(matrices_near(sum, ComplexMatrix::identity(4), 1e-12));
}

TEST(hamiltonian, rejects_non_hermitian) {
    EXPECT_THROW(Hamiltonian(ComplexMatrix::from_rows({{0.0, 1.0}, {2.0, 0.0}})), Error);
}

TEST(thermal, qubit_gibbs_and_free_energy) {
    auto h = qubit_h();
    Temperature t(1.0);
    auto pops = thermal_populations(h.spectrum().eigenvalues, t.beta());
    EXPECT_NEAR(pops[0], 0.8807970779778824, 1e-15);
    EXPECT_NEAR(pops[1], 0.11920292202211756, 1e-15);
    EXPECT_NEAR(equilibrium_free_energy(h, t), -1.1269280110429725, 1e-14);
    auto tau = gibbs_state(h, t);
    EXPECT_NEAR(free_energy(tau, h, t), equilibrium_free_energy(h, t), 1e-14);
}

TEST(thermal, large_and_negative_beta_are_finite) {
    std::vector<double> e{-50.0, 0.0, 50.0};
    auto hot = thermal_populations(e, 100.0);
    EXPECT_NEAR(hot[0], 1.0, 1e-15);
    auto inverted = thermal_populations(e, -100.0);
    EXPECT_NEAR(inverted[2], 1.0, 1e-15);
    EXPECT_TRUE(std::isfinite(log_partition_function(e, -100.0)));
}

TEST(thermal, gibbs_minimizes_free_energy) {
    Rng rng(8);
    auto h = Hamiltonian(random_hermitian(rng, 4));
    Temperature t(0.7);
    double f_eq = equilibrium_free_energy(h, t);
    for (int i = 0; i < 100; i++) {
        EXPECT_GE(free_energy(random_density_matrix(rng, 4), h, t), f_eq - 1e-12);
    }
}

TEST(energy, qubit_average) {
    EXPECT_NEAR(average_energy(bloch_state(0.8, kPi / 3), qubit_h()), -0.3, 1e-15);
}

TEST(partial_trace, product_state) {
    Rng rng(9);
    auto a = random_density_matrix(rng, 2);
    auto b = random_density_matrix(rng, 3);
    DensityMatrix ab(kron(a.matrix(), b.matrix()));
    BipartiteDims dims{2, 3};
    EXPECT_TRUE(matrices_near(partial_trace(ab, dims, Subsystem::System).matrix(), a.matrix(), 1e-14));
    EXPECT_TRUE(matrices_near(partial_trace(ab, dims, Subsystem::Ancilla).matrix(), b.matrix(), 1e-14));
}

TEST(purify, marginal_and_purity) {
    auto rho = bloch_state(0.8, kPi / 3);
    auto psi = purify(rho);
    EXPECT_NEAR(von_neumann_entropy(psi), 0.0, 1e-12);
    auto back = partial_trace(psi, BipartiteDims{2, 2}, Subsystem::System);
    EXPECT_TRUE(matrices_near(back.matrix(), rho.matrix(), 1e-14));
}

TEST(relative_entropy, values_and_support) {
    auto p = DensityMatrix(ComplexMatrix::diagonal(std::vector<double>{0.8, 0.2}));
    auto q = DensityMatrix::maximally_mixed(2);
    auto d = relative_entropy(p, q);
    EXPECT_FALSE(d.support_violation);
    EXPECT_NEAR(d.bits, 0.27807190511263774, 1e-14);
    auto pure0 = DensityMatrix(ComplexMatrix::diagonal(std::vector<double>{1.0, 0.0}));
    auto pure1 = DensityMatrix(ComplexMatrix::diagonal(std::vector<double>{0.0, 1.0}));
    auto bad = relative_entropy(pure0, pure1);
    EXPECT_TRUE(bad.support_violation);
    EXPECT_TRUE(std::isinf(bad.bits));
    EXPECT_NEAR(relative_entropy(q, q).bits, 0.0, 1e-14);
}

TEST(random, bloch_state_populations) {
    auto rho = bloch_state(0.8, kPi / 3);
    EXPECT_NEAR(rho.matrix()(0, 0).real(), 0.65, 1e-15);
    EXPECT_NEAR(rho.matrix()(1, 1).real(), 0.35, 1e-15);
}

TEST(random, seeds_reproduce) {
    Rng a(42);
    Rng b(42);
    EXPECT_TRUE(random_density_matrix(a, 3).matrix() == random_density_matrix(b, 3).matrix());
    EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
    EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
}

TEST(random, rank_deficient_state) {
    Rng rng(12);
    auto rho = random_density_matrix(rng, 5, 2);
    std::size_t positive = 0;
    for (double x : rho.eigenvalues()) {
        positive += x > 1e-10;
    }
    EXPECT_EQ(positive, 2u);
}
