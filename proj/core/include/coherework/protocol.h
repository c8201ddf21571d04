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

#ifndef COHEREWORK_PROTOCOL_H
#define COHEREWORK_PROTOCOL_H

#include <cstddef>
#include <string>
#include <vector>

#include "coherework/linalg.h"
#include "coherework/states.h"

namespace coherework {

inline constexpr double kDefaultPurityClamp = 1e-9;
inline constexpr double kMaxPurityClamp = 1e-3;

/// How eigenvectors of rho are assigned to energy eigenvectors by the step-1
/// rotation. Totals do not depend on the choice; individual step works do.
enum class Pairing {
    /// Largest population onto the lowest energy (the spin example's choice).
    DescendingPopulation,
    /// Eigen-index k of rho (ascending eigenvalue) onto energy index k.
    IndexOrder,
};

struct PlanOptions {
    double purity_clamp = kDefaultPurityClamp;
    Pairing pairing = Pairing::DescendingPopulation;
};

/// Energy eigenbasis shared by H and eta^H, plus the rotation taking rho's
/// eigenbasis onto it. Populations are unclamped.
struct DiagonalizingRotation {
    /// Columns |e_k>, ascending energy; inside a degenerate level they also
    /// diagonalize eta^H.
    ComplexMatrix energy_basis;
    std::vector<double> energies;
    /// Population of rho1 = V rho V^dagger on |e_k>.
    std::vector<double> rotated_populations;
    /// Population of eta^H on |e_k>.
    std::vector<double> target_populations;
    ComplexMatrix v;
};

DiagonalizingRotation diagonalizing_rotation(const DensityMatrix &rho, const Hamiltonian &h, Pairing pairing);

/// Three-step plan (rho, H) -> (rho1, H1) -> (eta^H, H2) -> (eta^H, H).
///
/// H1 makes rho1 thermal, H2 makes eta^H thermal, and all three Hamiltonians
/// are diagonal in `energy_basis`. Populations below `purity_clamp` are raised
/// to it and renormalized, which keeps H1 and H2 finite for rank-deficient
/// states. The energy gauge puts zero mean on the eigenvalues of H1 and H2.
struct ProtocolPlan {
    DensityMatrix rho0;
    Hamiltonian h0;
    Hamiltonian h1;
    Hamiltonian h2;
    ComplexMatrix v;
    Temperature temperature;
    double purity_clamp;
    Pairing pairing;

    ComplexMatrix energy_basis;
    std::vector<double> energies0;
    std::vector<double> energies1;
    std::vector<double> energies2;
    /// a_k after clamping; rho1 = sum_k a_k |e_k><e_k|.
    std::vector<double> rotated_populations;
    /// p_k after clamping; eta^H = sum_k p_k |e_k><e_k|.
    std::vector<double> target_populations;

    DensityMatrix rho1() const;
    DensityMatrix eta() const;
};

/// Throws ClampRequired when a population is numerically zero and
/// purity_clamp == 0, InvalidArgument when purity_clamp is outside [0, 1e-3].
ProtocolPlan build_plan(const DensityMatrix &rho, const Hamiltonian &h, Temperature t,
                        const PlanOptions &options = {});

/// Checks every plan invariant; throws Consistency with the failing property.
void validate_plan(const ProtocolPlan &plan);

struct LedgerEntry {
    std::string label;
    double work = 0.0;
    double heat_absorbed = 0.0;
    double energy_change = 0.0;
    double entropy_change = 0.0;

    double first_law_residual() const;
};

struct WorkLedger {
    std::vector<LedgerEntry> entries;
    double purity_clamp = 0.0;
    /// 0 for the closed-form ledger.
    std::size_t quasi_static_steps = 0;

    LedgerEntry totals() const;
};

/// Discretized run: rotate, staircase isotherm of `quasi_static_steps`
/// (quench to the next Hamiltonian, then full rethermalization) along a linear
/// eigenvalue schedule H1 -> H2, then quench back to H. The isotherm work
/// approaches F1 - F2 as O(1 / steps).
WorkLedger simulate(const ProtocolPlan &plan, std::size_t quasi_static_steps);

/// Closed-form ledger: W1 = -tr[rho1 H1 - rho H], W2 = F1(rho1) - F2(eta),
/// W3 = -tr[eta (H - H2)]. Totals equal (S(eta) - S(rho)) / beta up to the
/// clamp-induced error.
WorkLedger exact_step_works(const ProtocolPlan &plan);

}  // namespace coherework

#endif
