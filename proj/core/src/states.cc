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

#include "coherework/states.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "coherework/errors.h"
#include "units.h"

namespace coherework {

namespace {

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(12);
    out << v;
    return out.str();
}

void require_same_dim(std::size_t a, std::size_t b, const char *what) {
    if (a != b) {
        throw Error(
            ErrorKind::DimMismatch,
            std::string(what) + ": dimension " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

}  // namespace

Temperature::Temperature(double beta) : beta_(beta) {
    if (!std::isfinite(beta) || beta <= 0.0) {
        throw Error(ErrorKind::InvalidArgument, "Temperature: beta must be finite and > 0, got " + fmt(beta));
    }
}

DensityMatrix::DensityMatrix(const ComplexMatrix &m, double tol) {
    if (!m.is_square() || m.rows() == 0) {
        throw Error(ErrorKind::InvalidState, "DensityMatrix: shape must be square and non-empty");
    }
    double asym = hs_norm(m - m.adjoint());
    if (asym > tol) {
        throw Error(ErrorKind::InvalidState, "DensityMatrix: hermiticity violated, ||M - M^dagger|| = " + fmt(asym));
    }
    Complex tr = m.trace();
    if (std::abs(tr - Complex{1.0, 0.0}) > tol) {
        throw Error(ErrorKind::InvalidState, "DensityMatrix: trace is " + fmt(tr.real()) + " (expected 1)");
    }
    mat_ = (m + m.adjoint()) * Complex{0.5, 0.0};
    spectrum_ = hermitian_eig(mat_, tol);
    for (double &e : spectrum_.eigenvalues) {
        if (e < -tol) {
            throw Error(ErrorKind::InvalidState, "DensityMatrix: negative eigenvalue " + fmt(e));
        }
        if (e < 0.0) {
            e = 0.0;
        }
    }
}

DensityMatrix DensityMatrix::pure(std::span<const Complex> amplitudes) {
    double norm = 0.0;
    for (const Complex &c : amplitudes) {
        norm += std::norm(c);
    }
    if (norm <= 0.0) {
        throw Error(ErrorKind::InvalidState, "DensityMatrix: zero amplitude vector");
    }
    std::vector<Complex> psi(amplitudes.begin(), amplitudes.end());
    for (Complex &c : psi) {
        c /= std::sqrt(norm);
    }
    return DensityMatrix(ComplexMatrix::outer(psi, psi));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    return DensityMatrix(ComplexMatrix::identity(dim) * Complex{1.0 / static_cast<double>(dim), 0.0});
}

DensityMatrix DensityMatrix::from_spectrum(std::span<const double> probs, const ComplexMatrix &basis) {
    if (basis.rows() != probs.size() || basis.cols() != probs.size()) {
        throw Error(ErrorKind::DimMismatch, "DensityMatrix: basis shape does not match spectrum");
    }
    SpectralDecomposition sd{std::vector<double>(probs.begin(), probs.end()), basis};
    return DensityMatrix(sd.reconstruct());
}

Hamiltonian::Hamiltonian(const ComplexMatrix &m, double tol) {
    if (!m.is_square() || m.rows() == 0) {
        throw Error(ErrorKind::InvalidHamiltonian, "Hamiltonian: shape must be square and non-empty");
    }
    spectrum_ = hermitian_eig(m, tol);
    mat_ = (m + m.adjoint()) * Complex{0.5, 0.0};

    const auto &ev = spectrum_.eigenvalues;
    double scale = 1.0;
    for (double e : ev) {
        scale = std::max(scale, std::abs(e));
    }
    double gap = kClusterGap * scale;
    std::size_t n = ev.size();
    std::size_t start = 0;
    while (start < n) {
        std::size_t end = start + 1;
        while (end < n && ev[end] - ev[end - 1] <= gap) {
            end++;
        }
        EnergyLevel level{0.0, ComplexMatrix(n, n), {}};
        double sum = 0.0;
        for (std::size_t k = start; k < end; k++) {
            sum += ev[k];
            level.indices.push_back(k);
            auto col = spectrum_.eigenvectors.column(k);
            level.projector += ComplexMatrix::outer(col, col);
        }
        level.energy = sum / static_cast<double>(end - start);
        levels_.push_back(std::move(level));
        start = end;
    }
}

Hamiltonian Hamiltonian::diagonal(std::span<const double> energies) {
    return Hamiltonian(ComplexMatrix::diagonal(energies));
}

Hamiltonian Hamiltonian::from_basis(const ComplexMatrix &basis, std::span<const double> energies) {
    if (basis.rows() != energies.size() || basis.cols() != energies.size()) {
        throw Error(ErrorKind::DimMismatch, "Hamiltonian: basis shape does not match energies");
    }
    if (!basis.is_unitary(1e-9)) {
        throw Error(ErrorKind::NotUnitary, "Hamiltonian: basis is not unitary");
    }
    SpectralDecomposition sd{std::vector<double>(energies.begin(), energies.end()), basis};
    return Hamiltonian(sd.reconstruct());
}

double shannon_entropy(std::span<const double> probs) {
    double s = 0.0;
    for (double p : probs) {
        if (p > 0.0) {
            s -= p * std::log(p);
        }
    }
    return s;
}

double von_neumann_entropy(const DensityMatrix &rho) {
    return shannon_entropy(rho.eigenvalues());
}

double log_partition_function(std::span<const double> energies, double beta) {
    double shift = -std::numeric_limits<double>::infinity();
    for (double e : energies) {
        shift = std::max(shift, -beta * e);
    }
    double sum = 0.0;
    for (double e : energies) {
        sum += std::exp(-beta * e - shift);
    }
    return shift + std::log(sum);
}

std::vector<double> thermal_populations(std::span<const double> energies, double beta) {
    double shift = -std::numeric_limits<double>::infinity();
    for (double e : energies) {
        shift = std::max(shift, -beta * e);
    }
    std::vector<double> w(energies.size());
    double sum = 0.0;
    for (std::size_t k = 0; k < energies.size(); k++) {
        w[k] = std::exp(-beta * energies[k] - shift);
        sum += w[k];
    }
    for (double &x : w) {
        x /= sum;
    }
    return w;
}

DensityMatrix gibbs_state(const Hamiltonian &h, Temperature t) {
    auto w = thermal_populations(h.spectrum().eigenvalues, t.beta());
    std::vector<Complex> diag(w.begin(), w.end());
    return DensityMatrix(h.spectrum().recompose(diag));
}

double equilibrium_free_energy(const Hamiltonian &h, Temperature t) {
    return -log_partition_function(h.spectrum().eigenvalues, t.beta()) / t.beta();
}

double expectation(const ComplexMatrix &rho, const ComplexMatrix &op) {
    require_same_dim(rho.rows(), op.rows(), "expectation");
    if (!rho.is_square() || !op.is_square()) {
        throw Error(ErrorKind::NonSquare, "expectation: operands must be square");
    }
    double sum = 0.0;
    std::size_t n = rho.rows();
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            sum += (rho(i, j) * op(j, i)).real();
        }
    }
    return sum;
}

double average_energy(const DensityMatrix &rho, const Hamiltonian &h) {
    require_same_dim(rho.dim(), h.dim(), "average_energy");
    return expectation(rho.matrix(), h.matrix());
}

double free_energy(const DensityMatrix &rho, const Hamiltonian &h, Temperature t) {
    require_same_dim(rho.dim(), h.dim(), "free_energy");
    return average_energy(rho, h) - von_neumann_entropy(rho) / t.beta();
}

ComplexMatrix partial_trace(const ComplexMatrix &m, BipartiteDims dims, Subsystem keep) {
    if (!m.is_square() || m.rows() != dims.total()) {
        throw Error(
            ErrorKind::DimMismatch,
            "partial_trace: dimension " + std::to_string(m.rows()) + " does not factor as " +
                std::to_string(dims.system) + "x" + std::to_string(dims.ancilla));
    }
    std::size_t ds = dims.system;
    std::size_t da = dims.ancilla;
    if (keep == Subsystem::System) {
        ComplexMatrix out(ds, ds);
        for (std::size_t i = 0; i < ds; i++) {
            for (std::size_t j = 0; j < ds; j++) {
                Complex sum{0.0, 0.0};
                for (std::size_t a = 0; a < da; a++) {
                    sum += m(i * da + a, j * da + a);
                }
                out(i, j) = sum;
            }
        }
        return out;
    }
    ComplexMatrix out(da, da);
    for (std::size_t a = 0; a < da; a++) {
        for (std::size_t b = 0; b < da; b++) {
            Complex sum{0.0, 0.0};
            for (std::size_t s = 0; s < ds; s++) {
                sum += m(s * da + a, s * da + b);
            }
            out(a, b) = sum;
        }
    }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix &rho, BipartiteDims dims, Subsystem keep) {
    return DensityMatrix(partial_trace(rho.matrix(), dims, keep));
}

DensityMatrix purify(const DensityMatrix &rho) {
    std::size_t d = rho.dim();
    const auto &vecs = rho.eigenvectors();
    auto vals = rho.eigenvalues();
    std::vector<Complex> psi(d * d);
    for (std::size_t l = 0; l < d; l++) {
        double amp = std::sqrt(vals[l]);
        if (amp == 0.0) {
            continue;
        }
        for (std::size_t s = 0; s < d; s++) {
            psi[s * d + l] += amp * vecs(s, l);
        }
    }
    return DensityMatrix::pure(psi);
}

RelativeEntropy relative_entropy(const DensityMatrix &rho, const DensityMatrix &sigma) {
    require_same_dim(rho.dim(), sigma.dim(), "relative_entropy");
    const auto &sv = sigma.spectrum();
    // tr[rho ln sigma] = sum_k <s_k|rho|s_k> ln sigma_k.
    double cross = 0.0;
    for (std::size_t k = 0; k < sv.dim(); k++) {
        auto col = sv.eigenvectors.column(k);
        auto rc = rho.matrix() * std::span<const Complex>(col);
        double weight = 0.0;
        for (std::size_t r = 0; r < col.size(); r++) {
            weight += (std::conj(col[r]) * rc[r]).real();
        }
        double s = sv.eigenvalues[k];
        if (s < kSupportTolerance) {
            if (weight > DensityMatrix::kTolerance) {
                return {std::numeric_limits<double>::infinity(), true};
            }
            continue;
        }
        cross += weight * std::log(s);
    }
    double nats = -von_neumann_entropy(rho) - cross;
    return {std::max(nats, 0.0) / internal::kLn2, false};
}

}  // namespace coherework
