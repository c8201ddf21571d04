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

#ifndef COHEREWORK_FLUCTUATION_H
#define COHEREWORK_FLUCTUATION_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "coherework/linalg.h"
#include "coherework/states.h"

namespace coherework {

/// Two-point-measurement statistics of a thermal start rho0 = tau(h0), a
/// unitary v, and a final measurement of htau. Rows index the energy levels of
/// htau (m), columns those of h0 (n):
///     p[m][n] = tr[P^tau_m v P^0_n rho0 P^0_n v^dagger P^tau_m].
struct TransitionTable {
    std::size_t rows = 0;
    std::size_t cols = 0;
    /// Row-major, rows * cols entries.
    std::vector<double> probs;
    /// Level energies of h0 (one per column) and htau (one per row).
    std::vector<double> e0;
    std::vector<double> etau;
    double beta = 1.0;

    double at(std::size_t m, std::size_t n) const {
        return probs[m * cols + n];
    }
    /// sum_n p[m][n] = tr[rho_tau P^tau_m].
    std::vector<double> row_marginals() const;
    /// sum_m p[m][n]; the thermal level populations of h0.
    std::vector<double> column_marginals() const;
};

/// Throws NotUnitary (tolerance 1e-10) or DimMismatch.
TransitionTable transition_table(const Hamiltonian &h0, const Hamiltonian &htau, const ComplexMatrix &v,
                                 Temperature t);

/// <exp(beta W)> = sum_{m,n} exp(-beta (E^tau_m - E^0_n)) p[m][n].
double jarzynski_average(const TransitionTable &table);

/// F(htau) - F(h0), each F = -ln Z / beta.
double free_energy_difference(const Hamiltonian &h0, const Hamiltonian &htau, Temperature t);

/// -sum_{m,n} (E^tau_m - E^0_n) p[m][n].
double average_unitary_work(const TransitionTable &table);

struct ProjectionHeat {
    /// (S(eta_tau) - S(rho_tau)) / beta, absorbed by the optimal realization.
    double heat;
    /// Work on top of the unitary work; equals `heat` because the projection
    /// leaves the energy unchanged.
    double extra_work;
    /// Heat of the plain decohering realization.
    double decohering_heat = 0.0;
};

/// Final energy measurement of htau on rho_tau viewed as a projection process.
/// Throws DimMismatch.
ProjectionHeat projection_heat(const DensityMatrix &rho_tau, const Hamiltonian &htau, Temperature t);

struct HistogramBin {
    /// E^tau_m - E^0_n = -W.
    double delta_e;
    std::uint64_t count;
};

struct TrajectoryStats {
    std::uint64_t n_samples;
    std::uint64_t seed;
    double mean_exp_beta_w;
    double stderr_exp_beta_w;
    double mean_work;
    double stderr_work;
    /// Ascending delta_e; cells with equal delta_e are merged.
    std::vector<HistogramBin> histogram;
    /// Per-cell counts, same layout as TransitionTable::probs.
    std::vector<std::uint64_t> cell_counts;
};

/// Samples per chunk; chunk c draws from an engine seeded with
/// derive_seed(seed, c), so results do not depend on the thread count.
inline constexpr std::uint64_t kSampleChunk = 1 << 16;

/// Inverse-CDF sampling of (m, n) cells. `threads` = 0 uses
/// configured_thread_count().
TrajectoryStats sample_trajectories(const TransitionTable &table, std::uint64_t n_samples, std::uint64_t seed,
                                    std::size_t threads = 0);

}  // namespace coherework

#endif
