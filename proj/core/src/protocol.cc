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

#include "coherework/protocol.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "coherework/errors.h"

namespace coherework {

namespace {

// Populations at or below this are treated as exact zeros.
constexpr double kNumericalZero = 1e-14;

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); k++) {
        s += a[k] * b[k];
    }
    return s;
}

double diagonal_weight(const ComplexMatrix &m, std::span<const Complex> v) {
    auto mv = m * v;
    double w = 0.0;
    for (std::size_t r = 0; r < v.size(); r++) {
        w += (std::conj(v[r]) * mv[r]).real();
    }
    return w;
}

std::vector<double> clamp_populations(std::vector<double> probs, double clamp, const char *what) {
    bool changed = false;
    for (double &p : probs) {
        if (p < clamp || p <= kNumericalZero) {
            if (clamp == 0.0) {
                throw Error(
                    ErrorKind::ClampRequired,
                    std::string("build_plan: ") + what +
                        " has a zero population; a finite Hamiltonian needs purity_clamp > 0");
            }
            p = std::max(p, clamp);
            changed = true;
        }
    }
    if (changed) {
        double sum = std::accumulate(probs.begin(), probs.end(), 0.0);
        for (double &p : probs) {
            p /= sum;
        }
    }
    return probs;
}

// Zero-mean energies that make `probs` thermal at inverse temperature beta.
std::vector<double> thermalizing_energies(std::span<const double> probs, double beta) {
    std::vector<double> e(probs.size());
    for (std::size_t k = 0; k < probs.size(); k++) {
        e[k] = -std::log(probs[k]) / beta;
    }
    double mean = std::accumulate(e.begin(), e.end(), 0.0) / static_cast<double>(e.size());
    for (double &x : e) {
        x -= mean;
    }
    return e;
}

}  // namespace

DiagonalizingRotation diagonalizing_rotation(const DensityMatrix &rho, const Hamiltonian &h, Pairing pairing) {
    if (rho.dim() != h.dim()) {
        throw Error(ErrorKind::DimMismatch, "diagonalizing_rotation: state and Hamiltonian dimensions differ");
    }
    std::size_t d = rho.dim();
    const auto &hv = h.spectrum().eigenvectors;

    DiagonalizingRotation out{ComplexMatrix(d, d), {}, {}, {}, ComplexMatrix(d, d)};
    std::size_t col = 0;
    for (const auto &level : h.levels()) {
        std::size_t r = level.rank();
        if (r == 1) {
            std::size_t idx = level.indices.front();
            for (std::size_t row = 0; row < d; row++) {
                out.energy_basis(row, col) = hv(row, idx);
            }
            out.energies.push_back(level.energy);
            col++;
            continue;
        }
        // Diagonalize rho restricted to the degenerate eigenspace; that block
        // equals the block of eta^H.
        ComplexMatrix q(d, r);
        for (std::size_t j = 0; j < r; j++) {
            for (std::size_t row = 0; row < d; row++) {
                q(row, j) = hv(row, level.indices[j]);
            }
        }
        auto block = hermitian_eig(q.adjoint() * rho.matrix() * q);
        ComplexMatrix rotated = q * block.eigenvectors;
        for (std::size_t j = 0; j < r; j++) {
            for (std::size_t row = 0; row < d; row++) {
                out.energy_basis(row, col) = rotated(row, j);
            }
            out.energies.push_back(level.energy);
            col++;
        }
    }

    for (std::size_t k = 0; k < d; k++) {
        out.target_populations.push_back(std::max(0.0, diagonal_weight(rho.matrix(), out.energy_basis.column(k))));
    }

    auto rho_vals = rho.eigenvalues();
    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    if (pairing == Pairing::DescendingPopulation) {
        std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            return rho_vals[x] > rho_vals[y];
        });
    }
    const auto &rv = rho.eigenvectors();
    for (std::size_t k = 0; k < d; k++) {
        std::size_t src = order[k];
        out.rotated_populations.push_back(rho_vals[src]);
        // V += |e_k><r_src|
        for (std::size_t row = 0; row < d; row++) {
            for (std::size_t c = 0; c < d; c++) {
                out.v(row, c) += out.energy_basis(row, k) * std::conj(rv(c, src));
            }
        }
    }
    return out;
}

DensityMatrix ProtocolPlan::rho1() const {
    return DensityMatrix::from_spectrum(rotated_populations, energy_basis);
}

DensityMatrix ProtocolPlan::eta() const {
    return DensityMatrix::from_spectrum(target_populations, energy_basis);
}

ProtocolPlan build_plan(const DensityMatrix &rho, const Hamiltonian &h, Temperature t, const PlanOptions &options) {
    if (!(options.purity_clamp >= 0.0 && options.purity_clamp <= kMaxPurityClamp)) {
        throw Error(ErrorKind::InvalidArgument, "build_plan: purity_clamp must lie in [0, 1e-3]");
    }
    auto rot = diagonalizing_rotation(rho, h, options.pairing);
    auto a = clamp_populations(rot.rotated_populations, options.purity_clamp, "rho");
    auto p = clamp_populations(rot.target_populations, options.purity_clamp, "eta^H");
    auto e1 = thermalizing_energies(a, t.beta());
    auto e2 = thermalizing_energies(p, t.beta());

    return ProtocolPlan{
        rho,
        h,
        Hamiltonian::from_basis(rot.energy_basis, e1),
        Hamiltonian::from_basis(rot.energy_basis, e2),
        rot.v,
        t,
        options.purity_clamp,
        options.pairing,
        rot.energy_basis,
        rot.energies,
        std::move(e1),
        std::move(e2),
        std::move(a),
        std::move(p),
    };
}

void validate_plan(const ProtocolPlan &plan) {
    auto fail = [](const std::string &what) { throw Error(ErrorKind::Consistency, "ProtocolPlan: " + what); };
    std::size_t d = plan.rho0.dim();
    if (!plan.v.is_unitary()) {
        fail("step-1 operator is not unitary");
    }
    if (!plan.energy_basis.is_unitary(1e-9)) {
        fail("energy basis is not orthonormal");
    }
    auto rho1 = plan.rho1();
    auto eta = plan.eta();
    if (hs_norm(gibbs_state(plan.h1, plan.temperature).matrix() - rho1.matrix()) > 1e-8) {
        fail("rho1 is not thermal for H1");
    }
    if (hs_norm(gibbs_state(plan.h2, plan.temperature).matrix() - eta.matrix()) > 1e-8) {
        fail("eta^H is not thermal for H2");
    }
    double clamp_slack = 2.0 * plan.purity_clamp * static_cast<double>(d);
    ComplexMatrix rotated = plan.v * plan.rho0.matrix() * plan.v.adjoint();
    if (hs_norm(rotated - rho1.matrix()) > 1e-8 + clamp_slack) {
        fail("V rho V^dagger does not match rho1");
    }
    ComplexMatrix projected(d, d);
    for (const auto &level : plan.h0.levels()) {
        projected += level.projector * plan.rho0.matrix() * level.projector;
    }
    if (hs_norm(projected - eta.matrix()) > 1e-8 + clamp_slack) {
        fail("eta does not match the energy projection of rho");
    }
    for (const Hamiltonian *h : {&plan.h0, &plan.h1, &plan.h2}) {
        ComplexMatrix m = plan.energy_basis.adjoint() * h->matrix() * plan.energy_basis;
        double off = 0.0;
        for (std::size_t r = 0; r < d; r++) {
            for (std::size_t c = 0; c < d; c++) {
                if (r != c) {
                    off += std::norm(m(r, c));
                }
            }
        }
        if (std::sqrt(off) > 1e-9 * std::max(1.0, hs_norm(h->matrix()))) {
            fail("Hamiltonians do not share eigenprojectors");
        }
    }
}

double LedgerEntry::first_law_residual() const {
    return std::abs(energy_change - (heat_absorbed - work));
}

LedgerEntry WorkLedger::totals() const {
    LedgerEntry t{"total"};
    for (const auto &e : entries) {
        t.work += e.work;
        t.heat_absorbed += e.heat_absorbed;
        t.energy_change += e.energy_change;
        t.entropy_change += e.entropy_change;
    }
    return t;
}

namespace {

LedgerEntry rotate_entry(const ProtocolPlan &plan) {
    double before = average_energy(plan.rho0, plan.h0);
    double after = dot(plan.rotated_populations, plan.energies1);
    LedgerEntry e{"rotate"};
    e.work = before - after;
    e.energy_change = after - before;
    e.entropy_change = shannon_entropy(plan.rotated_populations) - von_neumann_entropy(plan.rho0);
    return e;
}

LedgerEntry quench_entry(const ProtocolPlan &plan) {
    double before = dot(plan.target_populations, plan.energies2);
    double after = dot(plan.target_populations, plan.energies0);
    LedgerEntry e{"quench"};
    e.work = before - after;
    e.energy_change = after - before;
    return e;
}

}  // namespace

WorkLedger simulate(const ProtocolPlan &plan, std::size_t quasi_static_steps) {
    if (quasi_static_steps == 0) {
        throw Error(ErrorKind::InvalidArgument, "simulate: quasi_static_steps must be >= 1");
    }
    double beta = plan.temperature.beta();
    std::size_t d = plan.energies1.size();
    const auto &e1 = plan.energies1;
    const auto &e2 = plan.energies2;

    std::vector<double> current = e1;
    std::vector<double> next(d);
    std::vector<double> tau = thermal_populations(current, beta);
    std::vector<double> tau_start = tau;
    double work = 0.0;
    double heat = 0.0;
    auto n = static_cast<double>(quasi_static_steps);
    for (std::size_t i = 0; i < quasi_static_steps; i++) {
        double frac = static_cast<double>(i + 1) / n;
        for (std::size_t k = 0; k < d; k++) {
            next[k] = e1[k] + frac * (e2[k] - e1[k]);
        }
        // Quench at fixed state, then rethermalize at fixed Hamiltonian.
        for (std::size_t k = 0; k < d; k++) {
            work += tau[k] * (current[k] - next[k]);
        }
        auto tau_next = thermal_populations(next, beta);
        for (std::size_t k = 0; k < d; k++) {
            heat += (tau_next[k] - tau[k]) * next[k];
        }
        tau = std::move(tau_next);
        std::swap(current, next);
    }

    LedgerEntry iso{"isotherm"};
    iso.work = work;
    iso.heat_absorbed = heat;
    iso.energy_change = dot(tau, current) - dot(tau_start, e1);
    iso.entropy_change = shannon_entropy(tau) - shannon_entropy(tau_start);

    WorkLedger ledger;
    ledger.entries = {rotate_entry(plan), std::move(iso), quench_entry(plan)};
    ledger.purity_clamp = plan.purity_clamp;
    ledger.quasi_static_steps = quasi_static_steps;
    return ledger;
}

WorkLedger exact_step_works(const ProtocolPlan &plan) {
    double beta = plan.temperature.beta();
    double s1 = shannon_entropy(plan.rotated_populations);
    double s2 = shannon_entropy(plan.target_populations);
    double u1 = dot(plan.rotated_populations, plan.energies1);
    double u2 = dot(plan.target_populations, plan.energies2);

    LedgerEntry iso{"isotherm"};
    iso.work = (u1 - s1 / beta) - (u2 - s2 / beta);
    iso.heat_absorbed = (s2 - s1) / beta;
    iso.energy_change = u2 - u1;
    iso.entropy_change = s2 - s1;

    WorkLedger ledger;
    ledger.entries = {rotate_entry(plan), std::move(iso), quench_entry(plan)};
    ledger.purity_clamp = plan.purity_clamp;
    return ledger;
}

}  // namespace coherework
