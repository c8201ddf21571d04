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

#ifndef COHEREWORK_PROJECTION_H
#define COHEREWORK_PROJECTION_H

#include <cstddef>
#include <string>
#include <vector>

#include "coherework/linalg.h"
#include "coherework/states.h"

namespace coherework {

/// Complete family of mutually orthogonal projectors {P_k}: P_k^2 = P_k =
/// P_k^dagger, P_k P_l = 0 for k != l, sum_k P_k = 1 (all within tol).
class ProjectorSet {
   public:
    static constexpr double kTolerance = 1e-10;

    explicit ProjectorSet(std::vector<ComplexMatrix> projectors, std::vector<std::string> labels = {},
                          double tol = kTolerance);

    /// Rank-1 projectors onto the columns of a unitary.
    static ProjectorSet from_basis(const ComplexMatrix &basis);
    /// Eigenprojectors of h (rank > 1 on degenerate levels), labelled "E<k>".
    static ProjectorSet from_hamiltonian(const Hamiltonian &h);
    static ProjectorSet computational(std::size_t dim);

    std::size_t size() const noexcept {
        return projectors_.size();
    }
    std::size_t dim() const noexcept {
        return projectors_.front().rows();
    }
    const ComplexMatrix &operator[](std::size_t k) const {
        return projectors_[k];
    }
    const std::vector<ComplexMatrix> &projectors() const noexcept {
        return projectors_;
    }
    const std::vector<std::string> &labels() const noexcept {
        return labels_;
    }
    std::size_t rank(std::size_t k) const {
        return ranks_[k];
    }
    bool is_rank_one() const;

   private:
    std::vector<ComplexMatrix> projectors_;
    std::vector<std::string> labels_;
    std::vector<std::size_t> ranks_;
};

/// eta = sum_k P_k rho P_k.
DensityMatrix project(const DensityMatrix &rho, const ProjectorSet &p);

/// Energy and entropy bookkeeping of one process. Positive work is extracted
/// from the system; the first law reads energy_change = heat_absorbed - work.
struct WorkReport {
    double work = 0.0;
    double entropy_change = 0.0;
    double energy_change = 0.0;
    double heat_absorbed = 0.0;

    /// |energy_change - (heat_absorbed - work)|.
    double first_law_residual() const;
};

/// Optimal average work of the projection rho -> eta:
///     W = (S(eta) - S(rho)) / beta - tr[H (eta - rho)],
/// realised with heat_absorbed = (S(eta) - S(rho)) / beta (reversible heat).
WorkReport optimal_projection_work(const DensityMatrix &rho, const Hamiltonian &h, const ProjectorSet &p,
                                   Temperature t);

struct EntropyBound {
    /// 0.5 * ||rho - 1/d||_2^2 * delta_a.
    double bound;
    /// Second smallest eigenvalue of 1 - M^T M (0 when d == 1).
    double delta_a;
    /// ||rho - 1/d||_2^2.
    double purity_distance_sq;
    /// M_kl = |<phi_k|l>|^2 with {|l>} the columns of `rho_basis`.
    std::vector<std::vector<double>> overlap;
    /// Eigenbasis of rho used for M. When rho is degenerate the bound may
    /// depend on this choice.
    ComplexMatrix rho_basis;
};

/// Lower bound on S(eta) - S(rho) for a rank-1 projector set. Throws RankError
/// otherwise.
EntropyBound entropy_change_bound(const DensityMatrix &rho, const ProjectorSet &p);

/// 1/2 [[1 + cos t, 1 - cos t], [1 - cos t, 1 + cos t]].
ComplexMatrix qubit_overlap_matrix(double theta);

struct FixedEnergyMaxWork {
    double lambda_star;
    double work;
    /// exp(-lambda* H) / Z; the maximum-entropy state at energy tr[rho H].
    DensityMatrix sigma;
};

/// Maximum average work extractable at fixed average energy U = tr[rho H]:
///     W = (lambda* U + ln tr exp(-lambda* H) - S(rho)) / beta,
/// with lambda* solving tr[sigma_lambda H] = U by bracketed bisection.
/// Throws EnergyOutOfRange unless min(E) < U < max(E).
FixedEnergyMaxWork max_work_fixed_energy(const DensityMatrix &rho, const Hamiltonian &h, Temperature t);

}  // namespace coherework

#endif
