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

#include "coherework/fluctuation.h"

#include "coherework/errors.h"
#include "coherework/projection.h"
#include "coherework/random.h"
#include "test_util.h"

using namespace coherework;
using namespace coherework::testing;

TEST(transition_table, identity_is_diagonal_thermal) {
    Temperature t(1.0);
    auto table = transition_table(qubit_h(), qubit_h(), ComplexMatrix::identity(2), t);
    EXPECT_NEAR(table.at(0, 0), 0.8807970779778824, 1e-15);
    EXPECT_NEAR(table.at(1, 1), 0.11920292202211756, 1e-15);
    EXPECT_EQ(table.at(0, 1), 0.0);
    EXPECT_NEAR(jarzynski_average(table), 1.0, 1e-15);
    EXPECT_NEAR(average_unitary_work(table), 0.0, 1e-15);
}

TEST(transition_table, hadamard_qubit) {
    Temperature t(1.0);
    auto table = transition_table(qubit_h(), qubit_h(), hadamard(), t);
    EXPECT_NEAR(table.at(0, 0), 0.8807970779778824 * 0.5, 1e-15);
    auto cols = table.column_marginals();
    EXPECT_NEAR(cols[0], 0.8807970779778824, 1e-15);
    auto rows = table.row_marginals();
    EXPECT_NEAR(rows[0], 0.5, 1e-15);
}

TEST(transition_table, matches_trace_formula) {
    Rng rng(61);
    Temperature t(0.9);
    Hamiltonian h0(random_hermitian(rng, 5));
    Hamiltonian ht(random_hermitian(rng, 5));
    auto v = random_unitary(rng, 5);
    auto table = transition_table(h0, ht, v, t);
    auto rho0 = gibbs_state(h0, t).matrix();
    for (std::size_t m = 0; m < 5; m++) {
        for (std::size_t n = 0; n < 5; n++) {
            const auto &pm = ht.levels()[m].projector;
            const auto &pn = h0.levels()[n].projector;
            double direct = (pm * v * pn * rho0 * pn * v.adjoint() * pm).trace().real();
            EXPECT_NEAR(table.at(m, n), direct, 1e-13);
        }
    }
}

TEST(transition_table, errors) {
    Temperature t(1.0);
    auto not_unitary = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 2.0}});
    try {
        transition_table(qubit_h(), qubit_h(), not_unitary, t);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotUnitary);
    }
    EXPECT_THROW(transition_table(qubit_h(), Hamiltonian::diagonal(std::vector<double>{0, 1, 2}),
                                  ComplexMatrix::identity(2), t),
                 Error);
}

TEST(jarzynski, scaled_qubit_gap) {
    Temperature t(1.0);
    Rng rng(62);
    auto ht = Hamiltonian::diagonal(std::vector<double>{-2.0, 2.0});
    auto table = transition_table(qubit_h(), ht, random_unitary(rng, 2), t);
    EXPECT_NEAR(jarzynski_average(table), 2.438106995966602, 1e-12);
    double ratio = (std::exp(2.0) + std::exp(-2.0)) / (std::exp(1.0) + std::exp(-1.0));
    EXPECT_NEAR(std::exp(-free_energy_difference(qubit_h(), ht, t)), ratio, 1e-13);
}

TEST(jarzynski, identity_for_random_unitaries) {
    Rng rng(63);
    for (int i = 0; i < 100; i++) {
        Temperature t(0.3 + 0.02 * i);
        Hamiltonian h0(random_hermitian(rng, 4));
        Hamiltonian ht(random_hermitian(rng, 4));
        auto table = transition_table(h0, ht, random_unitary(rng, 4), t);
        double exact = std::exp(-t.beta() * free_energy_difference(h0, ht, t));
        EXPECT_NEAR(jarzynski_average(table) / exact, 1.0, 1e-10);
    }
}

TEST(average_unitary_work, state_side_and_sign) {
    Temperature t(1.0);
    Rng rng(64);
    auto ht = Hamiltonian::diagonal(std::vector<double>{-2.0, 2.0});
    auto v = random_unitary(rng, 2);
    auto table = transition_table(qubit_h(), ht, v, t);
    auto rho0 = gibbs_state(qubit_h(), t).matrix();
    double state_side = (rho0 * qubit_h().matrix()).trace().real() -
                        (v * rho0 * v.adjoint() * ht.matrix()).trace().real();
    EXPECT_NEAR(average_unitary_work(table), state_side, 1e-12);

    // Swapping ground and excited at low temperature costs work.
    auto flip = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    auto cold = transition_table(qubit_h(), qubit_h(), flip, Temperature(10.0));
    EXPECT_LT(average_unitary_work(cold), -1.9);
}

TEST(projection_heat, cases) {
    Temperature t(2.0);
    auto diag = projection_heat(gibbs_state(qubit_h(), t), qubit_h(), t);
    EXPECT_NEAR(diag.heat, 0.0, 1e-14);
    EXPECT_EQ(diag.decohering_heat, 0.0);

    std::vector<Complex> plus{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
    auto mub = projection_heat(DensityMatrix::pure(plus), qubit_h(), t);
    EXPECT_NEAR(mub.heat, std::log(2.0) / 2.0, 1e-14);
    EXPECT_EQ(mub.extra_work, mub.heat);

    auto qubit = projection_heat(bloch_state(0.8, kPi / 3), qubit_h(), Temperature(1.0));
    EXPECT_NEAR(qubit.heat, 0.14704421549644464, 1e-13);
}

TEST(sample_trajectories, single_cell_has_no_variance) {
    auto table = transition_table(qubit_h(), qubit_h(), ComplexMatrix::identity(2), Temperature(50.0));
    // At beta = 50 the excited column weight underflows relative to 1.
    auto stats = sample_trajectories(table, 1000, 1);
    EXPECT_EQ(stats.histogram.size(), 1u);
    EXPECT_EQ(stats.stderr_exp_beta_w, 0.0);
    EXPECT_EQ(stats.mean_exp_beta_w, 1.0);
}

TEST(sample_trajectories, deterministic_across_thread_counts) {
    Rng rng(65);
    auto table = transition_table(qubit_h(), Hamiltonian::diagonal(std::vector<double>{-2.0, 2.0}),
                                  random_unitary(rng, 2), Temperature(1.0));
    auto a = sample_trajectories(table, 300000, 9, 1);
    auto b = sample_trajectories(table, 300000, 9, 4);
    auto c = sample_trajectories(table, 300000, 9);
    EXPECT_EQ(a.cell_counts, b.cell_counts);
    EXPECT_EQ(a.cell_counts, c.cell_counts);
    EXPECT_EQ(a.mean_exp_beta_w, b.mean_exp_beta_w);
    EXPECT_EQ(a.mean_work, c.mean_work);
    auto other = sample_trajectories(table, 300000, 10, 1);
    EXPECT_NE(a.cell_counts, other.cell_counts);
}

TEST(sample_trajectories, within_statistical_envelope) {
    Rng rng(66);
    auto table = transition_table(qubit_h(), Hamiltonian::diagonal(std::vector<double>{-2.0, 2.0}),
                                  random_unitary(rng, 2), Temperature(1.0));
    auto stats = sample_trajectories(table, 1'000'000, 3);
    double exact = jarzynski_average(table);
    EXPECT_LT(std::abs(stats.mean_exp_beta_w - exact), 5.0 * stats.stderr_exp_beta_w);
    EXPECT_LT(std::abs(stats.mean_work - average_unitary_work(table)), 5.0 * stats.stderr_work);
    std::uint64_t total = 0;
    for (const auto &bin : stats.histogram) {
        total += bin.count;
    }
    EXPECT_EQ(total, 1'000'000u);
}

TEST(sample_trajectories, unbiased_over_seeds) {
    Rng rng(67);
    Hamiltonian h0(random_hermitian(rng, 3));
    Hamiltonian ht(random_hermitian(rng, 3));
    auto table = transition_table(h0, ht, random_unitary(rng, 3), Temperature(0.7));
    double exact = jarzynski_average(table);
    double sum_err = 0.0;
    double sum_var = 0.0;
    for (std::uint64_t seed = 0; seed < 50; seed++) {
        auto stats = sample_trajectories(table, 20000, seed);
        sum_err += stats.mean_exp_beta_w - exact;
        sum_var += stats.stderr_exp_beta_w * stats.stderr_exp_beta_w;
    }
    double pooled = std::sqrt(sum_var) / 50.0;
    EXPECT_LT(std::abs(sum_err / 50.0), 3.0 * pooled);
}
