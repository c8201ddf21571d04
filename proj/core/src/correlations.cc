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

#include "coherework/correlations.h"

#include <cmath>
#include <string>

#include "coherework/errors.h"

namespace coherework {

BipartiteState::BipartiteState(DensityMatrix rho_sa, std::size_t dim_s, std::size_t dim_a)
    : rho_sa_(std::move(rho_sa)), dims_{dim_s, dim_a} {
    if (dim_s == 0 || dim_a == 0 || dims_.total() != rho_sa_.dim()) {
        throw Error(ErrorKind::DimMismatch, "BipartiteState: " + std::to_string(dim_s) + " x " +
                                                std::to_string(dim_a) + " does not match state dimension " +
                                                std::to_string(rho_sa_.dim()));
    }
}

BipartiteState BipartiteState::product(const DensityMatrix &rho_s, const DensityMatrix &rho_a) {
    return BipartiteState(DensityMatrix(kron(rho_s.matrix(), rho_a.matrix())), rho_s.dim(), rho_a.dim());
}

BipartiteState BipartiteState::purification(const DensityMatrix &rho_s) {
    return BipartiteState(purify(rho_s), rho_s.dim(), rho_s.dim());
}

DensityMatrix BipartiteState::system() const {
    return partial_trace(rho_sa_, dims_, Subsystem::System);
}

DensityMatrix BipartiteState::ancilla() const {
    return partial_trace(rho_sa_, dims_, Subsystem::Ancilla);
}

namespace {

void check_local_set(const BipartiteState &state, const ProjectorSet &p, const char *who) {
    if (p.dim() != state.dims().system) {
        throw Error(ErrorKind::DimMismatch, std::string(who) + ": projectors do not act on the system");
    }
    if (!p.is_rank_one()) {
        throw Error(ErrorKind::RankError, std::string(who) + ": projectors must be rank one");
    }
}

ComplexMatrix branch(const BipartiteState &state, const ComplexMatrix &projector) {
    ComplexMatrix lifted = kron(projector, ComplexMatrix::identity(state.dims().ancilla));
    return lifted * state.rho().matrix() * lifted;
}

}  // namespace

BipartiteState local_project(const BipartiteState &state, const ProjectorSet &p) {
    check_local_set(state, p, "local_project");
    std::size_t d = state.rho().dim();
    ComplexMatrix eta(d, d);
    for (const auto &projector : p.projectors()) {
        eta += branch(state, projector);
    }
    return BipartiteState(DensityMatrix(eta), state.dims().system, state.dims().ancilla);
}

double conditional_ancilla_entropy(const BipartiteState &state, const ProjectorSet &p) {
    check_local_set(state, p, "conditional_ancilla_entropy");
    double sum = 0.0;
    for (const auto &projector : p.projectors()) {
        ComplexMatrix part = partial_trace(branch(state, projector), state.dims(), Subsystem::Ancilla);
        double pk = part.trace().real();
        if (pk <= kBranchCutoff) {
            continue;
        }
        part *= Complex(1.0 / pk);
        sum += pk * von_neumann_entropy(DensityMatrix(part));
    }
    return sum;
}

double delta_correlation(const BipartiteState &state, const ProjectorSet &p) {
    return von_neumann_entropy(state.system()) - von_neumann_entropy(state.rho()) +
           conditional_ancilla_entropy(state, p);
}

WorkReport global_optimal_work(const BipartiteState &state, const Hamiltonian &h_s, const ProjectorSet &p,
                               Temperature t, const Hamiltonian *h_a) {
    if (h_s.dim() != state.dims().system) {
        throw Error(ErrorKind::DimMismatch, "global_optimal_work: system Hamiltonian dimension differs");
    }
    auto eta = local_project(state, p);
    if (h_a != nullptr) {
        if (h_a->dim() != state.dims().ancilla) {
            throw Error(ErrorKind::DimMismatch, "global_optimal_work: ancilla Hamiltonian dimension differs");
        }
        double ancilla_change = average_energy(eta.ancilla(), *h_a) - average_energy(state.ancilla(), *h_a);
        if (std::abs(ancilla_change) > 1e-8) {
            throw Error(ErrorKind::Consistency, "global_optimal_work: ancilla energy changed by " +
                                                    std::to_string(ancilla_change));
        }
    }
    WorkReport r;
    r.entropy_change = von_neumann_entropy(eta.rho()) - von_neumann_entropy(state.rho());
    r.energy_change = average_energy(eta.system(), h_s) - average_energy(state.system(), h_s);
    r.heat_absorbed = r.entropy_change * t.kt();
    r.work = r.heat_absorbed - r.energy_change;
    return r;
}

Lemma1Check verify_lemma1(const BipartiteState &state, const ProjectorSet &p) {
    double lhs = von_neumann_entropy(state.rho());
    double rhs = conditional_ancilla_entropy(state, p);
    return Lemma1Check{lhs, rhs, lhs >= rhs - 1e-10};
}

BipartiteState random_extension(Rng &rng, const DensityMatrix &rho_s, std::size_t dim_a, std::size_t dim_env) {
    std::size_t ds = rho_s.dim();
    std::size_t dx = dim_a * dim_env;
    if (dim_a == 0 || dim_env == 0 || dx < ds) {
        throw Error(ErrorKind::InvalidArgument, "random_extension: dim_a * dim_env must be >= the system dimension");
    }
    // Columns 0..ds-1 of a random unitary form the isometry R -> A x E.
    ComplexMatrix w = random_unitary(rng, dx);
    auto probs = rho_s.eigenvalues();
    const auto &basis = rho_s.eigenvectors();

    // phi[s][x] = sum_l sqrt(a_l) <s|r_l> W[x][l]
    ComplexMatrix phi(ds, dx);
    for (std::size_t s = 0; s < ds; s++) {
        for (std::size_t x = 0; x < dx; x++) {
            Complex v = 0.0;
            for (std::size_t l = 0; l < ds; l++) {
                v += std::sqrt(probs[l]) * basis(s, l) * w(x, l);
            }
            phi(s, x) = v;
        }
    }
    std::size_t d = ds * dim_a;
    ComplexMatrix rho(d, d);
    for (std::size_t s = 0; s < ds; s++) {
        for (std::size_t a = 0; a < dim_a; a++) {
            for (std::size_t s2 = 0; s2 < ds; s2++) {
                for (std::size_t a2 = 0; a2 < dim_a; a2++) {
                    Complex v = 0.0;
                    for (std::size_t e = 0; e < dim_env; e++) {
                        v += phi(s, a * dim_env + e) * std::conj(phi(s2, a2 * dim_env + e));
                    }
                    rho(s * dim_a + a, s2 * dim_a + a2) = v;
                }
            }
        }
    }
    return BipartiteState(DensityMatrix(rho), ds, dim_a);
}

}  // namespace coherework
