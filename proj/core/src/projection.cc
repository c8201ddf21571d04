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

#include "coherework/projection.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "coherework/errors.h"

namespace coherework {

ProjectorSet::ProjectorSet(std::vector<ComplexMatrix> projectors, std::vector<std::string> labels, double tol)
    : projectors_(std::move(projectors)), labels_(std::move(labels)) {
    if (projectors_.empty()) {
        throw Error(ErrorKind::InvalidProjectors, "ProjectorSet: empty");
    }
    std::size_t d = projectors_.front().rows();
    if (labels_.empty()) {
        for (std::size_t k = 0; k < projectors_.size(); k++) {
            labels_.push_back("P" + std::to_string(k));
        }
    }
    if (labels_.size() != projectors_.size()) {
        throw Error(ErrorKind::InvalidProjectors, "ProjectorSet: label count does not match projector count");
    }
    ComplexMatrix total(d, d);
    for (std::size_t k = 0; k < projectors_.size(); k++) {
        const auto &p = projectors_[k];
        if (!p.is_square() || p.rows() != d) {
            throw Error(ErrorKind::DimMismatch, "ProjectorSet: projector " + labels_[k] + " has the wrong shape");
        }
        if (hs_norm(p - p.adjoint()) > tol) {
            throw Error(ErrorKind::InvalidProjectors, "ProjectorSet: projector " + labels_[k] + " is not Hermitian");
        }
        if (hs_norm(p * p - p) > tol) {
            throw Error(ErrorKind::InvalidProjectors, "ProjectorSet: projector " + labels_[k] + " is not idempotent");
        }
        for (std::size_t l = 0; l < k; l++) {
            if (hs_norm(p * projectors_[l]) > tol) {
                throw Error(
                    ErrorKind::InvalidProjectors,
                    "ProjectorSet: projectors " + labels_[l] + " and " + labels_[k] + " are not orthogonal");
            }
        }
        double r = p.trace().real();
        if (r < 0.5) {
            throw Error(ErrorKind::InvalidProjectors, "ProjectorSet: projector " + labels_[k] + " is zero");
        }
        ranks_.push_back(static_cast<std::size_t>(std::lround(r)));
        total += p;
    }
    if (hs_norm(total - ComplexMatrix::identity(d)) > tol) {
        throw Error(ErrorKind::InvalidProjectors, "ProjectorSet: projectors do not sum to the identity");
    }
}

ProjectorSet ProjectorSet::from_basis(const ComplexMatrix &basis) {
    if (!basis.is_square()) {
        throw Error(ErrorKind::NonSquare, "ProjectorSet: basis matrix must be square");
    }
    if (!basis.is_unitary()) {
        throw Error(ErrorKind::NotUnitary, "ProjectorSet: basis columns are not orthonormal");
    }
    std::vector<ComplexMatrix> ps;
    for (std::size_t k = 0; k < basis.cols(); k++) {
        auto col = basis.column(k);
        ps.push_back(ComplexMatrix::outer(col, col));
    }
    return ProjectorSet(std::move(ps));
}

ProjectorSet ProjectorSet::from_hamiltonian(const Hamiltonian &h) {
    std::vector<ComplexMatrix> ps;
    std::vector<std::string> labels;
    std::size_t k = 0;
    for (const auto &level : h.levels()) {
        ps.push_back(level.projector);
        labels.push_back("E" + std::to_string(k++));
    }
    return ProjectorSet(std::move(ps), std::move(labels));
}

ProjectorSet ProjectorSet::computational(std::size_t dim) {
    return from_basis(ComplexMatrix::identity(dim));
}

bool ProjectorSet::is_rank_one() const {
    return std::all_of(ranks_.begin(), ranks_.end(), [](std::size_t r) { return r == 1; });
}

DensityMatrix project(const DensityMatrix &rho, const ProjectorSet &p) {
    if (rho.dim() != p.dim()) {
        throw Error(
            ErrorKind::DimMismatch,
            "project: state dimension " + std::to_string(rho.dim()) + " vs projector dimension " +
                std::to_string(p.dim()));
    }
    ComplexMatrix eta(rho.dim(), rho.dim());
    for (const auto &proj : p.projectors()) {
        eta += proj * rho.matrix() * proj;
    }
    return DensityMatrix(eta);
}

double WorkReport::first_law_residual() const {
    return std::abs(energy_change - (heat_absorbed - work));
}

WorkReport optimal_projection_work(const DensityMatrix &rho, const Hamiltonian &h, const ProjectorSet &p,
                                   Temperature t) {
    if (rho.dim() != h.dim()) {
        throw Error(ErrorKind::DimMismatch, "optimal_projection_work: state and Hamiltonian dimensions differ");
    }
    DensityMatrix eta = project(rho, p);
    WorkReport r;
    r.entropy_change = von_neumann_entropy(eta) - von_neumann_entropy(rho);
    r.energy_change = expectation(eta.matrix() - rho.matrix(), h.matrix());
    r.heat_absorbed = r.entropy_change / t.beta();
    r.work = r.heat_absorbed - r.energy_change;
    return r;
}

EntropyBound entropy_change_bound(const DensityMatrix &rho, const ProjectorSet &p) {
    if (rho.dim() != p.dim()) {
        throw Error(ErrorKind::DimMismatch, "entropy_change_bound: state and projector dimensions differ");
    }
    if (!p.is_rank_one()) {
        throw Error(ErrorKind::RankError, "entropy_change_bound: projectors must be rank 1");
    }
    std::size_t d = rho.dim();
    const ComplexMatrix &basis = rho.eigenvectors();

    EntropyBound out{0.0, 0.0, 0.0, std::vector<std::vector<double>>(d, std::vector<double>(d, 0.0)), basis};
    for (std::size_t l = 0; l < d; l++) {
        auto col = basis.column(l);
        for (std::size_t k = 0; k < d; k++) {
            auto pc = p[k] * std::span<const Complex>(col);
            double m = 0.0;
            for (std::size_t r = 0; r < d; r++) {
                m += (std::conj(col[r]) * pc[r]).real();
            }
            out.overlap[k][l] = m;
        }
    }

    // 1 - M^T M is real symmetric; its spectrum lies in [0, 1].
    ComplexMatrix a(d, d);
    for (std::size_t i = 0; i < d; i++) {
        for (std::size_t j = 0; j < d; j++) {
            double mtm = 0.0;
            for (std::size_t k = 0; k < d; k++) {
                mtm += out.overlap[k][i] * out.overlap[k][j];
            }
            a(i, j) = (i == j ? 1.0 : 0.0) - mtm;
        }
    }
    if (d > 1) {
        auto sd = hermitian_eig(a);
        out.delta_a = std::clamp(sd.eigenvalues[1], 0.0, 1.0);
    }

    ComplexMatrix diff = rho.matrix() - ComplexMatrix::identity(d) * Complex{1.0 / static_cast<double>(d), 0.0};
    double hs = hs_norm(diff);
    out.purity_distance_sq = hs * hs;
    out.bound = 0.5 * out.purity_distance_sq * out.delta_a;
    return out;
}

ComplexMatrix qubit_overlap_matrix(double theta) {
    double c = std::cos(theta);
    return ComplexMatrix::from_rows({
        {0.5 * (1.0 + c), 0.5 * (1.0 - c)},
        {0.5 * (1.0 - c), 0.5 * (1.0 + c)},
    });
}

namespace {

double energy_at(std::span<const double> energies, double lambda) {
    auto w = thermal_populations(energies, lambda);
    double u = 0.0;
    for (std::size_t k = 0; k < w.size(); k++) {
        u += w[k] * energies[k];
    }
    return u;
}

constexpr double kEnergyTolerance = 1e-12;
constexpr int kMaxExpansions = 200;
constexpr int kMaxBisections = 400;

}  // namespace

FixedEnergyMaxWork max_work_fixed_energy(const DensityMatrix &rho, const Hamiltonian &h, Temperature t) {
    if (rho.dim() != h.dim()) {
        throw Error(ErrorKind::DimMismatch, "max_work_fixed_energy: state and Hamiltonian dimensions differ");
    }
    const auto &energies = h.spectrum().eigenvalues;
    double u = average_energy(rho, h);
    double scale = std::max({1.0, std::abs(h.min_energy()), std::abs(h.max_energy())});
    if (!(u > h.min_energy() + kEnergyTolerance * scale && u < h.max_energy() - kEnergyTolerance * scale)) {
        throw Error(
            ErrorKind::EnergyOutOfRange,
            "max_work_fixed_energy: average energy " + std::to_string(u) + " outside the open spectral interval (" +
                std::to_string(h.min_energy()) + ", " + std::to_string(h.max_energy()) + ")");
    }

    // tr[sigma_lambda H] decreases monotonically in lambda.
    auto f = [&](double lambda) { return energy_at(energies, lambda) - u; };
    double norm = hs_norm(h.matrix());
    double lo = -64.0 / norm;
    double hi = 64.0 / norm;
    for (int i = 0; f(lo) < 0.0; i++) {
        if (i == kMaxExpansions) {
            throw Error(ErrorKind::NoConvergence, "max_work_fixed_energy: could not bracket lambda*");
        }
        lo *= 2.0;
    }
    for (int i = 0; f(hi) > 0.0; i++) {
        if (i == kMaxExpansions) {
            throw Error(ErrorKind::NoConvergence, "max_work_fixed_energy: could not bracket lambda*");
        }
        hi *= 2.0;
    }
    double mid = 0.5 * (lo + hi);
    for (int i = 0; i < kMaxBisections; i++) {
        mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (std::abs(fm) < kEnergyTolerance || mid == lo || mid == hi) {
            break;
        }
        if (fm > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    double log_z = log_partition_function(energies, mid);
    auto w = thermal_populations(energies, mid);
    std::vector<Complex> diag(w.begin(), w.end());
    DensityMatrix sigma(h.spectrum().recompose(diag));
    double work = (mid * u + log_z - von_neumann_entropy(rho)) / t.beta();
    return {mid, work, sigma};
}

}  // namespace coherework
