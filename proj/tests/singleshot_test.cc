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

#include "coherework/singleshot.h"

#include <random>

#include "coherework/errors.h"
#include "coherework/projection.h"
#include "coherework/random.h"
#include "test_util.h"

using namespace coherework;
using namespace coherework::testing;

namespace {

Distribution uniform2() {
    return Distribution({0.5, 0.5});
}

Distribution random_distribution(Rng &rng, std::size_t d, double floor) {
    std::vector<double> w(d);
    for (auto &x : w) {
        x = std::exponential_distribution<double>(1.0)(rng) + floor;
    }
    return Distribution::normalized(w);
}

}  // namespace

TEST(distribution, validation) {
    EXPECT_THROW(Distribution({0.5, 0.6}), Error);
    EXPECT_THROW(Distribution({1.5, -0.5}), Error);
    EXPECT_THROW(Distribution(std::vector<double>{}), Error);
    EXPECT_NEAR(Distribution::normalized({1.0, 3.0})[1], 0.75, 1e-16);
}

TEST(d_min_eps, examples) {
    EXPECT_NEAR(d_min_eps(uniform2(), uniform2(), 0.0), 0.0, 1e-15);
    EXPECT_NEAR(d_min_eps(Distribution({1.0, 0.0}), uniform2(), 0.0), 1.0, 1e-15);
    EXPECT_NEAR(d_min_eps(Distribution({0.9, 0.1}), uniform2(), 0.1), 1.0, 1e-12);
}

TEST(d_max_eps, examples) {
    EXPECT_NEAR(d_max_eps(uniform2(), uniform2(), 0.3), 0.0, 1e-15);
    EXPECT_NEAR(d_max_eps(Distribution({1.0, 0.0}), uniform2(), 0.0), 1.0, 1e-15);
    EXPECT_NEAR(d_max_eps(Distribution({0.9, 0.1}), uniform2(), 0.1), std::log2(1.6), 1e-12);
}

TEST(smoothing, eps_validation_and_dims) {
    EXPECT_THROW(d_min_eps(uniform2(), uniform2(), 1.0), Error);
    EXPECT_THROW(d_max_eps(uniform2(), uniform2(), -0.1), Error);
    try {
        d_min_eps(uniform2(), Distribution({0.2, 0.3, 0.5}), 0.0);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimMismatch);
    }
}

TEST(smoothing, monotone_in_eps) {
    Rng rng(51);
    for (int i = 0; i < 100; i++) {
        auto p = random_distribution(rng, 2 + i % 4, 0.0);
        auto q = random_distribution(rng, 2 + i % 4, 0.1);
        double prev_min = -1e300;
        double prev_max = 1e300;
        for (int k = 0; k < 20; k++) {
            double eps = 0.045 * k;
            double lo = d_min_eps(p, q, eps);
            double hi = d_max_eps(p, q, eps);
            EXPECT_GE(lo, prev_min - 1e-12);
            EXPECT_LE(hi, prev_max + 1e-12);
            prev_min = lo;
            prev_max = hi;
        }
    }
}

TEST(smoothing, sandwich_relative_entropy) {
    Rng rng(52);
    for (int i = 0; i < 500; i++) {
        auto p = random_distribution(rng, 2 + i % 5, 0.0);
        auto q = random_distribution(rng, 2 + i % 5, 0.05);
        double d = relative_entropy_bits(p, q);
        EXPECT_LE(d_min_eps(p, q, 0.0), d + 1e-12);
        EXPECT_LE(d, d_max_eps(p, q, 0.0) + 1e-12);
    }
}

TEST(relative_entropy_bits, values) {
    EXPECT_NEAR(relative_entropy_bits(Distribution({0.8, 0.2}), uniform2()), 0.27807190511263774, 1e-15);
    EXPECT_TRUE(std::isinf(relative_entropy_bits(uniform2(), Distribution({1.0, 0.0}))));
}

TEST(iid_rate, equal_distributions) {
    for (std::size_t n : {1u, 5u, 30u}) {
        auto r = iid_rate(uniform2(), uniform2(), 0.0, n);
        EXPECT_NEAR(r.rate_min, 0.0, 1e-12);
        EXPECT_NEAR(r.rate_max, 0.0, 1e-12);
    }
    // With eps > 0 the hypothesis-testing form keeps -log2(1 - eps) / n.
    auto r = iid_rate(uniform2(), uniform2(), 0.05, 10);
    EXPECT_NEAR(r.rate_min, -std::log2(0.95) / 10.0, 1e-12);
    EXPECT_NEAR(r.rate_max, 0.0, 1e-12);
}

TEST(iid_rate, single_copy_matches_direct_evaluation) {
    Distribution p({0.8, 0.2});
    auto r = iid_rate(p, uniform2(), 0.0, 1);
    EXPECT_EQ(r.rate_min, d_min_eps(p, uniform2(), 0.0));
    EXPECT_EQ(r.rate_max, d_max_eps(p, uniform2(), 0.0));
    Distribution p3({0.5, 0.3, 0.2});
    Distribution q3({0.2, 0.3, 0.5});
    auto r3 = iid_rate(p3, q3, 0.1, 1);
    EXPECT_EQ(r3.rate_min, d_min_eps(p3, q3, 0.1));
    EXPECT_EQ(r3.rate_max, d_max_eps(p3, q3, 0.1));
}

TEST(iid_rate, approaches_relative_entropy) {
    Distribution p({0.8, 0.2});
    double d = relative_entropy_bits(p, uniform2());
    auto r8 = iid_rate(p, uniform2(), 0.05, 8);
    auto r64 = iid_rate(p, uniform2(), 0.05, 64);
    EXPECT_NEAR(r64.rate_min, 0.18594257562455074, 1e-12);
    EXPECT_NEAR(r64.rate_max, 0.42004158502888317, 1e-12);
    EXPECT_LT(std::abs(r64.rate_min - d), std::abs(r8.rate_min - d));
    EXPECT_LT(std::abs(r64.rate_max - d), std::abs(r8.rate_max - d));
    EXPECT_LT(std::abs(r64.rate_min - d), 0.15);
    EXPECT_EQ(r64.type_classes, 65u);
}

TEST(iid_rate, matches_explicit_sequence_enumeration) {
    // 3 copies of a ternary alphabet, enumerated sequence by sequence.
    Distribution p({0.6, 0.3, 0.1});
    Distribution q({0.2, 0.5, 0.3});
    std::vector<double> pp;
    std::vector<double> qq;
    for (int a = 0; a < 3; a++) {
        for (int b = 0; b < 3; b++) {
            for (int c = 0; c < 3; c++) {
                pp.push_back(p[a] * p[b] * p[c]);
                qq.push_back(q[a] * q[b] * q[c]);
            }
        }
    }
    Distribution p3 = Distribution::normalized(pp);
    Distribution q3 = Distribution::normalized(qq);
    for (double eps : {0.0, 0.05, 0.2}) {
        auto r = iid_rate(p, q, eps, 3);
        EXPECT_NEAR(r.rate_min, d_min_eps(p3, q3, eps) / 3.0, 1e-12);
        EXPECT_NEAR(r.rate_max, d_max_eps(p3, q3, eps) / 3.0, 1e-12);
    }
}

TEST(iid_rate, alphabet_too_large) {
    std::vector<double> w(20, 0.05);
    Distribution p(w);
    try {
        iid_rate(p, p, 0.0, 64);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::AlphabetTooLarge);
    }
}

TEST(consistency_work, qubit_convergence) {
    auto rho = bloch_state(0.8, kPi / 3);
    Temperature t(1.0);
    double w_opt = binary_entropy(0.65) - binary_entropy(0.8);
    double prev = 1e300;
    for (std::size_t n : {8u, 16u, 32u, 64u}) {
        auto c = consistency_work(rho, qubit_h(), t, 0.05, n);
        double err = std::abs(c.work - w_opt);
        EXPECT_LT(err, prev);
        prev = err;
        EXPECT_NEAR(c.rotation_work, 0.3, 1e-12);
        EXPECT_NEAR(c.failure_probability, 0.0975, 1e-15);
    }
}

TEST(consistency_work, gibbs_state) {
    auto h = qubit_h();
    Temperature t(0.8);
    auto tau = gibbs_state(h, t);
    for (std::size_t n : {1u, 16u}) {
        EXPECT_NEAR(consistency_work(tau, h, t, 0.0, n).work, 0.0, 1e-12);
        // The eps > 0 remainder is the hypothesis-testing offset alone.
        double offset = std::log(2.0) * t.kt() * -std::log2(0.9) / static_cast<double>(n);
        EXPECT_NEAR(consistency_work(tau, h, t, 0.1, n).work, offset, 1e-12);
    }
}

TEST(consistency_work, diagonal_state_tends_to_zero) {
    auto rho = DensityMatrix(ComplexMatrix::diagonal(std::vector<double>{0.6, 0.4}));
    Temperature t(1.0);
    double e16 = std::abs(consistency_work(rho, qubit_h(), t, 0.05, 16).work);
    double e64 = std::abs(consistency_work(rho, qubit_h(), t, 0.05, 64).work);
    EXPECT_LT(e64, e16);
}
