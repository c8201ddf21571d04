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

#ifndef COHEREWORK_STATES_H
#define COHEREWORK_STATES_H

#include <cstddef>
#include <span>
#include <vector>

#include "coherework/linalg.h"

namespace coherework {

/// Inverse temperature with k_B = 1. All energies, works and heats share the
/// Hamiltonian's units; entropies are in nats unless a name says bits.
class Temperature {
   public:
    explicit Temperature(double beta);
    double beta() const noexcept {
        return beta_;
    }
    double kt() const noexcept {
        return 1.0 / beta_;
    }

   private:
    double beta_;
};

/// Hermitian, positive semidefinite, unit-trace matrix.
///
/// Construction validates all three properties at `tol` and caches the
/// spectrum. Eigenvalues in [-tol, 0) are clamped to exactly 0; anything more
/// negative is rejected. Error messages start with "DensityMatrix: <property>".
class DensityMatrix {
   public:
    static constexpr double kTolerance = 1e-10;

    explicit DensityMatrix(const ComplexMatrix &m, double tol = kTolerance);

    /// |psi><psi| for the normalized amplitude vector.
    static DensityMatrix pure(std::span<const Complex> amplitudes);
    static DensityMatrix maximally_mixed(std::size_t dim);
    /// sum_k probs[k] |b_k><b_k| with b_k the columns of `basis`.
    static DensityMatrix from_spectrum(std::span<const double> probs, const ComplexMatrix &basis);

    const ComplexMatrix &matrix() const noexcept {
        return mat_;
    }
    std::size_t dim() const noexcept {
        return mat_.rows();
    }
    /// Ascending, clamped to be non-negative.
    std::span<const double> eigenvalues() const noexcept {
        return spectrum_.eigenvalues;
    }
    const ComplexMatrix &eigenvectors() const noexcept {
        return spectrum_.eigenvectors;
    }
    const SpectralDecomposition &spectrum() const noexcept {
        return spectrum_;
    }

   private:
    ComplexMatrix mat_;
    SpectralDecomposition spectrum_;
};

/// One eigenspace of a Hamiltonian after clustering nearly equal eigenvalues.
struct EnergyLevel {
    double energy;
    ComplexMatrix projector;
    /// Columns of the spectral decomposition spanning this level.
    std::vector<std::size_t> indices;

    std::size_t rank() const noexcept {
        return indices.size();
    }
};

/// Hermitian observable with cached spectral decomposition and eigenprojectors.
///
/// Eigenvalues closer than kClusterGap * max(1, max|E|) are merged into one
/// level (energy = mean of the cluster), so downstream code depends only on
/// eigenprojectors and never on the basis chosen inside a degenerate space.
class Hamiltonian {
   public:
    static constexpr double kClusterGap = 1e-8;

    explicit Hamiltonian(const ComplexMatrix &m, double tol = kDefaultTolerance);
    static Hamiltonian diagonal(std::span<const double> energies);
    /// sum_k energies[k] |b_k><b_k| with b_k the columns of the unitary `basis`.
    static Hamiltonian from_basis(const ComplexMatrix &basis, std::span<const double> energies);

    const ComplexMatrix &matrix() const noexcept {
        return mat_;
    }
    std::size_t dim() const noexcept {
        return mat_.rows();
    }
    const SpectralDecomposition &spectrum() const noexcept {
        return spectrum_;
    }
    std::span<const EnergyLevel> levels() const noexcept {
        return levels_;
    }
    double min_energy() const {
        return spectrum_.eigenvalues.front();
    }
    double max_energy() const {
        return spectrum_.eigenvalues.back();
    }

   private:
    ComplexMatrix mat_;
    SpectralDecomposition spectrum_;
    std::vector<EnergyLevel> levels_;
};

/// -sum p ln p with 0 ln 0 = 0.
double shannon_entropy(std::span<const double> probs);

/// -tr[rho ln rho] in nats.
double von_neumann_entropy(const DensityMatrix &rho);

/// ln sum_k exp(-beta E_k), evaluated with a max shift. Any sign of beta.
double log_partition_function(std::span<const double> energies, double beta);

/// exp(-beta E_k) / Z for each entry of `energies`. Any sign of beta.
std::vector<double> thermal_populations(std::span<const double> energies, double beta);

DensityMatrix gibbs_state(const Hamiltonian &h, Temperature t);

/// -ln(Z) / beta.
double equilibrium_free_energy(const Hamiltonian &h, Temperature t);

/// Re tr[rho op]; both must be square with equal dimension.
double expectation(const ComplexMatrix &rho, const ComplexMatrix &op);

double average_energy(const DensityMatrix &rho, const Hamiltonian &h);

/// tr[rho H] - S(rho) / beta.
double free_energy(const DensityMatrix &rho, const Hamiltonian &h, Temperature t);

enum class Subsystem { System, Ancilla };

struct BipartiteDims {
    std::size_t system;
    std::size_t ancilla;

    std::size_t total() const noexcept {
        return system * ancilla;
    }
};

/// Index convention: basis state |s>|a> has index s * dims.ancilla + a.
ComplexMatrix partial_trace(const ComplexMatrix &m, BipartiteDims dims, Subsystem keep);
DensityMatrix partial_trace(const DensityMatrix &rho, BipartiteDims dims, Subsystem keep);

/// sum_l sqrt(a_l) |l>|l> with {|l>} the eigenbasis of rho and the ancilla
/// labelled by the same eigen-index; ancilla dimension equals rho.dim().
DensityMatrix purify(const DensityMatrix &rho);

struct RelativeEntropy {
    /// tr[rho (log2 rho - log2 sigma)]; +inf when support_violation is set.
    double bits;
    bool support_violation;
};

/// sigma-eigenvalues below kSupportTolerance count as outside the support.
inline constexpr double kSupportTolerance = 1e-12;

RelativeEntropy relative_entropy(const DensityMatrix &rho, const DensityMatrix &sigma);

}  // namespace coherework

#endif
