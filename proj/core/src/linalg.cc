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

#include "coherework/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "coherework/errors.h"

namespace coherework {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw Error(
            ErrorKind::DimMismatch,
            "ComplexMatrix: " + std::to_string(entries_.size()) + " entries for shape " + std::to_string(rows_) +
                "x" + std::to_string(cols_));
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t k = 0; k < n; k++) {
        m(k, k) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t k = 0; k < values.size(); k++) {
        m(k, k) = values[k];
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t k = 0; k < values.size(); k++) {
        m(k, k) = values[k];
    }
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    std::size_t n_rows = rows.size();
    std::size_t n_cols = n_rows == 0 ? 0 : rows.begin()->size();
    std::vector<Complex> entries;
    entries.reserve(n_rows * n_cols);
    for (const auto &row : rows) {
        if (row.size() != n_cols) {
            throw Error(ErrorKind::DimMismatch, "ComplexMatrix: ragged rows");
        }
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return ComplexMatrix(n_rows, n_cols, std::move(entries));
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> a, std::span<const Complex> b) {
    ComplexMatrix m(a.size(), b.size());
    for (std::size_t r = 0; r < a.size(); r++) {
        for (std::size_t c = 0; c < b.size(); c++) {
            m(r, c) = a[r] * std::conj(b[c]);
        }
    }
    return m;
}

std::vector<Complex> ComplexMatrix::column(std::size_t c) const {
    std::vector<Complex> out(rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        out[r] = (*this)(r, c);
    }
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            m(c, r) = std::conj((*this)(r, c));
        }
    }
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex t{0.0, 0.0};
    for (std::size_t k = 0; k < std::min(rows_, cols_); k++) {
        t += (*this)(k, k);
    }
    return t;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    if (!is_square()) {
        return false;
    }
    return hs_norm(*this - adjoint()) <= tol * std::max(hs_norm(*this), 1.0);
}

bool ComplexMatrix::is_unitary(double tol) const {
    if (!is_square()) {
        return false;
    }
    return hs_norm(adjoint() * *this - identity(rows_)) <= tol * std::sqrt(static_cast<double>(rows_));
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw Error(ErrorKind::DimMismatch, "ComplexMatrix: shape mismatch in addition");
    }
    for (std::size_t k = 0; k < entries_.size(); k++) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw Error(ErrorKind::DimMismatch, "ComplexMatrix: shape mismatch in subtraction");
    }
    for (std::size_t k = 0; k < entries_.size(); k++) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &e : entries_) {
        e *= scale;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols_ != b.rows_) {
        throw Error(ErrorKind::DimMismatch, "ComplexMatrix: shape mismatch in product");
    }
    ComplexMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; r++) {
        for (std::size_t k = 0; k < a.cols_; k++) {
            Complex ark = a(r, k);
            if (ark == Complex{0.0, 0.0}) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols_; c++) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

std::vector<Complex> operator*(const ComplexMatrix &a, std::span<const Complex> v) {
    if (a.cols_ != v.size()) {
        throw Error(ErrorKind::DimMismatch, "ComplexMatrix: shape mismatch in matrix-vector product");
    }
    std::vector<Complex> out(a.rows_);
    for (std::size_t r = 0; r < a.rows_; r++) {
        for (std::size_t c = 0; c < a.cols_; c++) {
            out[r] += a(r, c) * v[c];
        }
    }
    return out;
}

double hs_norm(const ComplexMatrix &a) {
    double sum = 0.0;
    for (const Complex &e : a.entries()) {
        sum += std::norm(e);
    }
    return std::sqrt(sum);
}

Complex hs_inner(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::DimMismatch, "hs_inner: shape mismatch");
    }
    Complex sum{0.0, 0.0};
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t k = 0; k < ea.size(); k++) {
        sum += std::conj(ea[k]) * eb[k];
    }
    return sum;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ra = 0; ra < a.rows(); ra++) {
        for (std::size_t ca = 0; ca < a.cols(); ca++) {
            Complex s = a(ra, ca);
            for (std::size_t rb = 0; rb < b.rows(); rb++) {
                for (std::size_t cb = 0; cb < b.cols(); cb++) {
                    out(ra * b.rows() + rb, ca * b.cols() + cb) = s * b(rb, cb);
                }
            }
        }
    }
    return out;
}

ComplexMatrix SpectralDecomposition::recompose(std::span<const Complex> diagonal) const {
    const ComplexMatrix &v = eigenvectors;
    std::size_t n = v.rows();
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < diagonal.size(); k++) {
        Complex w = diagonal[k];
        if (w == Complex{0.0, 0.0}) {
            continue;
        }
        for (std::size_t r = 0; r < n; r++) {
            Complex vr = v(r, k) * w;
            for (std::size_t c = 0; c < n; c++) {
                out(r, c) += vr * std::conj(v(c, k));
            }
        }
    }
    return out;
}

ComplexMatrix SpectralDecomposition::reconstruct() const {
    return apply([](double e) { return e; });
}

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix &m) {
    double sum = 0.0;
    for (std::size_t r = 0; r < m.rows(); r++) {
        for (std::size_t c = 0; c < m.cols(); c++) {
            if (r != c) {
                sum += std::norm(m(r, c));
            }
        }
    }
    return std::sqrt(sum);
}

// Applies M <- G^dagger M G and V <- V G for the 2x2 unitary G acting on (p, q).
void rotate(ComplexMatrix &m, ComplexMatrix &v, std::size_t p, std::size_t q) {
    Complex apq = m(p, q);
    double r = std::abs(apq);
    if (r == 0.0) {
        return;
    }
    double app = m(p, p).real();
    double aqq = m(q, q).real();
    Complex phase_q = std::conj(apq) / r;

    double theta = (aqq - app) / (2.0 * r);
    double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0) {
        t = -t;
    }
    double c = 1.0 / std::sqrt(t * t + 1.0);
    double s = t * c;

    Complex g_pp = c;
    Complex g_pq = s;
    Complex g_qp = -s * phase_q;
    Complex g_qq = c * phase_q;

    std::size_t n = m.rows();
    for (std::size_t k = 0; k < n; k++) {
        Complex mkp = m(k, p);
        Complex mkq = m(k, q);
        m(k, p) = mkp * g_pp + mkq * g_qp;
        m(k, q) = mkp * g_pq + mkq * g_qq;
    }
    for (std::size_t k = 0; k < n; k++) {
        Complex mpk = m(p, k);
        Complex mqk = m(q, k);
        m(p, k) = std::conj(g_pp) * mpk + std::conj(g_qp) * mqk;
        m(q, k) = std::conj(g_pq) * mpk + std::conj(g_qq) * mqk;
    }
    m(p, q) = 0.0;
    m(q, p) = 0.0;
    m(p, p) = m(p, p).real();
    m(q, q) = m(q, q).real();

    for (std::size_t k = 0; k < n; k++) {
        Complex vkp = v(k, p);
        Complex vkq = v(k, q);
        v(k, p) = vkp * g_pp + vkq * g_qp;
        v(k, q) = vkp * g_pq + vkq * g_qq;
    }
}

}  // namespace

SpectralDecomposition hermitian_eig(const ComplexMatrix &a, double tol) {
    if (!a.is_square()) {
        throw Error(
            ErrorKind::NonSquare,
            "hermitian_eig: matrix is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
    std::size_t n = a.rows();
    double norm = hs_norm(a);
    double asym = hs_norm(a - a.adjoint());
    if (asym > tol * norm) {
        throw Error(ErrorKind::NonHermitian, "hermitian_eig: ||A - A^dagger|| = " + std::to_string(asym));
    }

    ComplexMatrix m = (a + a.adjoint()) * Complex{0.5, 0.0};
    ComplexMatrix v = ComplexMatrix::identity(n);
    double threshold = kJacobiTolerance * norm;
    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; sweep++) {
        if (off_diagonal_norm(m) <= threshold) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; p++) {
            for (std::size_t q = p + 1; q < n; q++) {
                rotate(m, v, p, q);
            }
        }
    }
    if (!converged && off_diagonal_norm(m) > threshold) {
        throw Error(ErrorKind::NoConvergence, "hermitian_eig: Jacobi sweeps did not converge");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return m(x, x).real() < m(y, y).real();
    });

    SpectralDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; k++) {
        std::size_t src = order[k];
        out.eigenvalues[k] = m(src, src).real();
        std::size_t pivot = 0;
        double best = -1.0;
        for (std::size_t r = 0; r < n; r++) {
            double mag = std::abs(v(r, src));
            if (mag > best * (1.0 + 1e-12)) {
                best = mag;
                pivot = r;
            }
        }
        Complex fix = best > 0 ? std::conj(v(pivot, src)) / best : Complex{1.0, 0.0};
        for (std::size_t r = 0; r < n; r++) {
            out.eigenvectors(r, k) = v(r, src) * fix;
        }
        out.eigenvectors(pivot, k) = out.eigenvectors(pivot, k).real();
    }
    return out;
}

}  // namespace coherework
