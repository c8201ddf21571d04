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

#ifndef COHEREWORK_TESTS_TEST_UTIL_H
#define COHEREWORK_TESTS_TEST_UTIL_H

#include <cmath>
#include <numbers>
#include <vector>

#include "gtest/gtest.h"

#include "coherework/linalg.h"
#include "coherework/states.h"

namespace coherework::testing {

inline constexpr double kPi = std::numbers::pi;

inline double binary_entropy(double x) {
    return -x * std::log(x) - (1.0 - x) * std::log(1.0 - x);
}

inline ::testing::AssertionResult matrices_near(const ComplexMatrix &a, const ComplexMatrix &b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return ::testing::AssertionFailure() << "shape mismatch";
    }
    double err = hs_norm(a - b);
    if (err > tol) {
        return ::testing::AssertionFailure() << "||a - b|| = " << err << " > " << tol;
    }
    return ::testing::AssertionSuccess();
}

inline Hamiltonian qubit_h() {
    return Hamiltonian::diagonal(std::vector<double>{-1.0, 1.0});
}

inline ComplexMatrix hadamard() {
    double s = 1.0 / std::sqrt(2.0);
    return ComplexMatrix::from_rows({{s, s}, {s, -s}});
}

}  // namespace coherework::testing

#endif
