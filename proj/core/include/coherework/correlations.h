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

#ifndef COHEREWORK_CORRELATIONS_H
#define COHEREWORK_CORRELATIONS_H

#include <cstddef>

#include "coherework/projection.h"
#include "coherework/random.h"
#include "coherework/states.h"

namespace coherework {

/// State of system S and ancilla A; basis index s * dim_a + a.
class BipartiteState {
   public:
    /// Throws DimMismatch unless dim_s * dim_a == rho_sa.dim().
    BipartiteState(DensityMatrix rho_sa, std::size_t dim_s, std::size_t dim_a);

    static BipartiteState product(const DensityMatrix &rho_s, const DensityMatrix &rho_a);
    /// purify(rho_s), ancilla dimension rho_s.dim().
    static BipartiteState purification(const DensityMatrix &rho_s);

    const DensityMatrix &rho() const noexcept {
        return rho_sa_;
    }
    BipartiteDims dims() const noexcept {
        return dims_;
    }
    DensityMatrix system() const;
    DensityMatrix ancilla() const;

   private:
    DensityMatrix rho_sa_;
    BipartiteDims dims_;
};

/// sum_k (P_k x 1) rho (P_k x 1) for a rank-1 set P on S. Throws DimMismatch
/// or RankError.
BipartiteState local_project(const BipartiteState &state, const ProjectorSet &p);

/// Branches with p_k at or below this are dropped from conditional sums.
inline constexpr double kBranchCutoff = 1e-12;

/// sum_k p_k S(eta^A_k), eta^A_k = tr_S[(P_k x 1) rho (P_k x 1)] / p_k.
double conditional_ancilla_entropy(const BipartiteState &state, const ProjectorSet &p);

/// S(rho^S) - S(rho^SA) + sum_k p_k S(eta^A_k), in nats.
double delta_correlation(const BipartiteState &state, const ProjectorSet &p);

/// Optimal work of the local projection with the ancilla as a resource:
///     W = (S(eta^SA) - S(rho^SA)) / beta - tr[h_s (eta^S - rho^S)].
/// If h_a is given, its energy change must vanish within 1e-8 (Consistency
/// otherwise).
WorkReport global_optimal_work(const BipartiteState &state, const Hamiltonian &h_s, const ProjectorSet &p,
                               Temperature t, const Hamiltonian *h_a = nullptr);

struct Lemma1Check {
    /// S(rho^SA).
    double lhs;
    /// sum_k p_k S(eta^A_k).
    double rhs;
    /// lhs >= rhs - 1e-10.
    bool holds;
};

Lemma1Check verify_lemma1(const BipartiteState &state, const ProjectorSet &p);

/// Random state on S x A with S-marginal rho_s: purify rho_s onto a reference
/// R, apply a random isometry R -> A x E and discard E. Requires
/// dim_a * dim_env >= rho_s.dim().
BipartiteState random_extension(Rng &rng, const DensityMatrix &rho_s, std::size_t dim_a, std::size_t dim_env);

}  // namespace coherework

#endif
