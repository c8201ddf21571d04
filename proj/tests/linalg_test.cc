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

#include "coherework/linalg.h"

#include <Eigen/Dense>
#include <algorithm>

#include "coherework/errors.h"
#include "coherework/random.h"
#include "test_util.h"

using namespace coherework;
using coherework::testing::matrices_near;

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix &m) {
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); r++) {
        for (std::size_t c = 0; c < m.cols(); c++) {
            out(r, c) = m(r, c);
        }
    }
    return out;
}

}  // namespace

TEST(linalg, identity_and_trace) {
    auto i3 = ComplexMatrix::identity(3);
    EXPECT_EQ(i3.trace(), Complex(3.0));
    EXPECT_TRUE(i3.is_unitary());
    EXPECT_TRUE(i3.is_hermitian());
}

TEST(linalg, product_and_adjoint) {
    auto a = ComplexMatrix::from_rows({{1.0, Complex(0, 2)}, {3.0, 4.0}});
    auto b = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    auto ab = a * b;
    EXPECT_EQ(ab(0, 0), Complex(0, 2));
    EXPECT_EQ(ab(0, 1), Complex(1.0));
    EXPECT_EQ(a.adjoint()(1, 0), Complex(0, -2));
    EXPECT_FALSE(a.is_hermitian());
}

TEST(linalg, kron_index_convention) {
    auto a = ComplexMatrix::diagonal(std::vector<double>{1.0, 2.0});
    auto b = ComplexMatrix::diagonal(std::vector<double>{1.0, 10.0, 100.0});
    auto k = kron(a, b);
    ASSERT_EQ(k.rows(), 6u);
    // |s>|a> sits at s * 3 + a.
    EXPECT_EQ(k(1 * 3 + 2, 1 * 3 + 2), Complex(200.0));
    EXPECT_EQ(k(0 * 3 + 1, 0 * 3 + 1), Complex(10.0));
}

TEST(linalg, hs_norm_and_inner) {
    auto a = ComplexMatrix::from_rows({{1.0, Complex(0, 1)}, {0.0, 2.0}});
    EXPECT_NEAR(hs_norm(a), std::sqrt(6.0), 1e-15);
    EXPECT_NEAR(hs_inner(a, a).real(), 6.0, 1e-15);
}

TEST(hermitian_eig, pauli_y) {
    auto y = ComplexMatrix::from_rows({{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}});
    auto s = hermitian_eig(y);
    EXPECT_NEAR(s.eigenvalues[0], -1.0, 1e-14);
    EXPECT_NEAR(s.eigenvalues[1], 1.0, 1e-14);
    EXPECT_TRUE(matrices_near(s.reconstruct(), y, 1e-13));
}

TEST(hermitian_eig, rejects_bad_input) {
    EXPECT_THROW(hermitian_eig(ComplexMatrix(2, 3)), Error);
    try {
        hermitian_eig(ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}}));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonHermitian);
    }
}

TEST(hermitian_eig, degenerate_spectrum) {
    auto d = ComplexMatrix::diagonal(std::vector<double>{2.0, -1.0, 2.0, 2.0});
    Rng rng(3);
    auto u = random_unitary(rng, 4);
    auto s = hermitian_eig(u * d * u.adjoint());
    EXPECT_NEAR(s.eigenvalues[0], -1.0, 1e-12);
    for (std::size_t k = 1; k < 4; k++) {
        EXPECT_NEAR(s.eigenvalues[k], 2.0, 1e-12);
    }
    EXPECT_TRUE(s.eigenvectors.is_unitary(1e-12));
}

TEST(hermitian_eig, matches_eigen_on_random_matrices) {
    Rng rng(20260201);
    for (std::size_t trial = 0; trial < 200; trial++) {
        std::size_t d = 1 + trial % 12;
        auto a = random_hermitian(rng, d);
        auto s = hermitian_eig(a);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> oracle(to_eigen(a));
        ASSERT_EQ(oracle.info(), Eigen::Success);
        double scale = std::max(1.0, hs_norm(a));
        for (std::size_t k = 0; k < d; k++) {
            EXPECT_NEAR(s.eigenvalues[k], oracle.eigenvalues()(static_cast<Eigen::Index>(k)), 1e-12 * scale);
        }
        EXPECT_TRUE(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end()));
        EXPECT_TRUE(s.eigenvectors.is_unitary(1e-11));
        EXPECT_TRUE(matrices_near(s.reconstruct(), a, 1e-11 * scale));
    }
}

TEST(hermitian_eig, phase_convention_and_determinism) {
    Rng rng(5);
    auto a = random_hermitian(rng, 6);
    auto s1 = hermitian_eig(a);
    auto s2 = hermitian_eig(a);
    EXPECT_EQ(s1.eigenvalues, s2.eigenvalues);
    EXPECT_TRUE(s1.eigenvectors == s2.eigenvectors);
    for (std::size_t k = 0; k < 6; k++) {
        auto col = s1.eigenvectors.column(k);
        auto big = std::max_element(col.begin(), col.end(),
                                    [](Complex x, Complex y) { return std::abs(x) < std::abs(y); });
        EXPECT_EQ(big->imag(), 0.0);
        EXPECT_GT(big->real(), 0.0);
    }
}

TEST(hermitian_eig, apply_function) {
    auto x = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    auto s = hermitian_eig(x);
    auto sq = s.apply([](double e) { return e * e; });
    EXPECT_TRUE(matrices_near(sq, ComplexMatrix::identity(2), 1e-14));
}
