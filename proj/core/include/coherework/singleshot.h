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

#ifndef COHEREWORK_SINGLESHOT_H
#define COHEREWORK_SINGLESHOT_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "coherework/states.h"

namespace coherework {

/// Probability vector; entries >= 0 summing to 1 within 1e-12.
class Distribution {
   public:
    static constexpr double kSumTolerance = 1e-12;

    explicit Distribution(std::vector<double> probs);
    /// Rescales nonnegative weights to unit sum.
    static Distribution normalized(std::vector<double> weights);

    std::size_t size() const noexcept {
        return probs_.size();
    }
    double operator[](std::size_t k) const {
        return probs_[k];
    }
    std::span<const double> probs() const noexcept {
        return probs_;
    }

   private:
    std::vector<double> probs_;
};

/// Hypothesis-testing smooth min-relative entropy in bits:
///     -log2 min { q(T) : 0 <= T <= 1, p(T) >= 1 - eps }
/// over (possibly randomized) tests T. The optimum takes outcomes in order of
/// decreasing p_k / q_k and at most one outcome fractionally; at eps = 0 it is
/// -log2 q(supp p).
double d_min_eps(const Distribution &p, const Distribution &q, double eps);

/// Smooth max-relative entropy in bits over the total-variation ball of
/// radius eps around p: min over p' of max_k log2(p'_k / q_k).
/// Equals log2 r* with r* = max(1, min { r : sum_k max(0, p_k - r q_k) <= eps }).
double d_max_eps(const Distribution &p, const Distribution &q, double eps);

/// D(p||q) in bits; +infinity when supp p is not inside supp q.
double relative_entropy_bits(const Distribution &p, const Distribution &q);

struct IidRates {
    double rate_min;
    double rate_max;
    std::size_t type_classes;
};

/// Largest number of type classes iid_rate will enumerate.
inline constexpr std::size_t kMaxTypeClasses = 2'000'000;

/// (1/n) D_min^eps(p^n||q^n) and (1/n) D_max^eps(p^n||q^n), evaluated over
/// type classes with log-domain multinomial weights. Throws AlphabetTooLarge
/// when the number of classes exceeds kMaxTypeClasses.
IidRates iid_rate(const Distribution &p, const Distribution &q, double eps, std::size_t n_copies);

struct ConsistencyWork {
    /// rotation_work + (ln 2 / beta) (rate_min - rate_max).
    double work;
    /// tr[(rho - rho1) H].
    double rotation_work;
    double rate_min;
    double rate_max;
    /// 2 eps - eps^2; reported only.
    double failure_probability;
};

/// Average work of the split rho -> rho1 -> tau -> eta^H with the two diagonal
/// steps counted single-shot on n copies. rho1 and eta^H are the (clamped)
/// populations of build_plan with default options.
ConsistencyWork consistency_work(const DensityMatrix &rho, const Hamiltonian &h, Temperature t, double eps,
                                 std::size_t n_copies);

}  // namespace coherework

#endif
