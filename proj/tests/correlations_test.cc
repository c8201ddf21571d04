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

#include "coherework/correlations.h"

#include "coherework/errors.h"
#include "test_util.h"

using namespace coherework;
using namespace coherework::testing;

namespace {

ProjectorSet plus_minus_basis() {
    return ProjectorSet::from_basis(hadamard());
}

}  // namespace

TEST(bipartite_state, dimension_check) {
    EXPECT_THROW(BipartiteState(DensityMatrix::maximally_mixed(6), 2, 2), Error);
    BipartiteState s(DensityMatrix::maximally_mixed(6), 2, 3);
    EXPECT_TRUE(matrices_near(s.ancilla().matrix(), DensityMatrix::maximally_mixed(3).matrix(), 1e-15));
}

TEST(local_project, product_state) {
    Rng rng(71);
    auto rs = random_density_matrix(rng, 2);
    auto ra = random_density_matrix(rng, 3);
    auto p = ProjectorSet::computational(2);
    auto eta = local_project(BipartiteState::product(rs, ra), p);
    auto expected = kron(project(rs, p).matrix(), ra.matrix());
    EXPECT_TRUE(matrices_near(eta.rho().matrix(), expected, 1e-14));
}

TEST(local_project, bell_state) {
    double s = 1.0 / std::sqrt(2.0);
    auto bell = DensityMatrix::pure(std::vector<Complex>{s, 0.0, 0.0, s});
    auto eta = local_project(BipartiteState(bell, 2, 2), ProjectorSet::computational(2));
    auto expected = ComplexMatrix::diagonal(std::vector<double>{0.5, 0.0, 0.0, 0.5});
    EXPECT_TRUE(matrices_near(eta.rho().matrix(), expected, 1e-15));
}

TEST(local_project, classical_quantum_blocks_and_ancilla_invariance) {
    Rng rng(72);
    for (int i = 0; i < 50; i++) {
        BipartiteState state(random_density_matrix(rng, 6), 2, 3);
        auto p = ProjectorSet::from_basis(random_unitary(rng, 2));
        auto eta = local_project(state, p);
        EXPECT_TRUE(matrices_near(eta.ancilla().matrix(), state.ancilla().matrix(), 1e-12));
        EXPECT_TRUE(matrices_near(eta.system().matrix(), project(state.system(), p).matrix(), 1e-12));
        // Off-block parts (P_k x 1) eta (P_l x 1), k != l, vanish.
        auto id = ComplexMatrix::identity(3);
        auto off = kron(p[0], id) * eta.rho().matrix() * kron(p[1], id);
        EXPECT_LT(hs_norm(off), 1e-12);
    }
}

TEST(local_project, rank_error) {
    BipartiteState state(DensityMatrix::maximally_mixed(6), 3, 2);
    auto coarse = ProjectorSet({ComplexMatrix::diagonal(std::vector<double>{1.0, 1.0, 0.0}),
                                ComplexMatrix::diagonal(std::vector<double>{0.0, 0.0, 1.0})});
    try {
        local_project(state, coarse);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::RankError);
    }
    EXPECT_THROW(local_project(state, ProjectorSet::computational(2)), Error);
}

TEST(delta_correlation, product_purification_and_classical) {
    auto rho = bloch_state(0.8, kPi / 3);
    auto p = ProjectorSet::from_hamiltonian(qubit_h());
    EXPECT_NEAR(delta_correlation(BipartiteState::product(rho, DensityMatrix::maximally_mixed(2)), p), 0.0, 1e-12);
    EXPECT_NEAR(delta_correlation(BipartiteState::purification(rho), p), binary_entropy(0.8), 1e-12);

    // 1/2 (|0><0| x s0 + |1><1| x s1) with distinguishable but non-orthogonal s0, s1.
    auto s0 = bloch_state(1.0, 0.0);
    auto s1 = bloch_state(1.0, kPi / 2);
    auto m = kron(ComplexMatrix::diagonal(std::vector<double>{0.5, 0.0}), s0.matrix()) +
             kron(ComplexMatrix::diagonal(std::vector<double>{0.0, 0.5}), s1.matrix());
    BipartiteState cq(DensityMatrix(m), 2, 2);
    EXPECT_GT(delta_correlation(cq, plus_minus_basis()), 1e-3);
}

TEST(delta_correlation, bounds_and_decomposition) {
    Rng rng(73);
    for (int i = 0; i < 200; i++) {
        std::size_t da = 2 + i % 2;
        BipartiteState state(random_density_matrix(rng, 2 * da, i % 3 == 0 ? 1 : 0), 2, da);
        auto p = ProjectorSet::from_basis(random_unitary(rng, 2));
        double delta = delta_correlation(state, p);
        double s_s = von_neumann_entropy(state.system());
        EXPECT_GE(delta, -1e-10);
        EXPECT_LE(delta, s_s + 1e-10);
        auto eta = local_project(state, p);
        double lhs = von_neumann_entropy(eta.rho()) - von_neumann_entropy(state.rho());
        double rhs = von_neumann_entropy(project(state.system(), p)) - s_s + delta;
        EXPECT_NEAR(lhs, rhs, 1e-10);
    }
}

TEST(verify_lemma1, cases) {
    auto rho = bloch_state(0.8, kPi / 3);
    auto p = ProjectorSet::from_hamiltonian(qubit_h());
    auto pure = verify_lemma1(BipartiteState::purification(rho), p);
    EXPECT_TRUE(pure.holds);
    EXPECT_NEAR(pure.lhs, 0.0, 1e-12);
    EXPECT_NEAR(pure.rhs, 0.0, 1e-12);

    auto ra = DensityMatrix::maximally_mixed(3);
    auto prod = verify_lemma1(BipartiteState::product(rho, ra), p);
    EXPECT_NEAR(prod.lhs, binary_entropy(0.8) + std::log(3.0), 1e-12);
    EXPECT_NEAR(prod.rhs, std::log(3.0), 1e-12);

    Rng rng(74);
    for (int i = 0; i < 500; i++) {
        std::size_t da = 2 + i % 2;
        BipartiteState state(random_density_matrix(rng, 2 * da), 2, da);
        EXPECT_TRUE(verify_lemma1(state, ProjectorSet::from_basis(random_unitary(rng, 2))).holds);
    }
}

TEST(global_optimal_work, product_and_purification) {
    auto rho = bloch_state(0.8, kPi / 3);
    auto h = qubit_h();
    auto p = ProjectorSet::from_hamiltonian(h);
    Temperature t(1.0);
    double local = optimal_projection_work(rho, h, p, t).work;
    auto prod = global_optimal_work(BipartiteState::product(rho, DensityMatrix::maximally_mixed(2)), h, p, t);
    EXPECT_NEAR(prod.work, local, 1e-12);
    auto pur = global_optimal_work(BipartiteState::purification(rho), h, p, t);
    EXPECT_NEAR(pur.work, binary_entropy(0.65), 1e-12);
    EXPECT_NEAR(pur.work, local + binary_entropy(0.8), 1e-12);
}

TEST(global_optimal_work, ancilla_hamiltonian_check) {
    auto rho = bloch_state(0.8, kPi / 3);
    auto h = qubit_h();
    auto p = ProjectorSet::from_hamiltonian(h);
    auto h_a = Hamiltonian::diagonal(std::vector<double>{0.0, 5.0});
    EXPECT_NO_THROW(global_optimal_work(BipartiteState::purification(rho), h, p, Temperature(1.0), &h_a));
}

TEST(random_extension, fixed_marginal_and_purification_maximizes) {
    Rng rng(75);
    auto rho = bloch_state(0.8, kPi / 3);
    auto h = qubit_h();
    auto p = ProjectorSet::from_hamiltonian(h);
    Temperature t(1.0);
    double best = global_optimal_work(BipartiteState::purification(rho), h, p, t).work;
    for (int i = 0; i < 200; i++) {
        auto s = random_extension(rng, rho, 2, 2 + i % 3);
        EXPECT_TRUE(matrices_near(s.system().matrix(), rho.matrix(), 1e-12));
        EXPECT_LE(global_optimal_work(s, h, p, t).work, best + 1e-8);
    }
    EXPECT_THROW(random_extension(rng, DensityMatrix::maximally_mixed(4), 1, 2), Error);
}
