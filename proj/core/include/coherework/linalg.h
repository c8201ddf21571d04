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

#ifndef COHEREWORK_LINALG_H
#define COHEREWORK_LINALG_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace coherework {

using Complex = std::complex<double>;

/// Default relative tolerance for Hermiticity / unitarity predicates.
inline constexpr double kDefaultTolerance = 1e-10;

/// Jacobi sweeps stop once the off-diagonal Hilbert-Schmidt mass drops below
/// this fraction of the input norm.
inline constexpr double kJacobiTolerance = 1e-13;

/// Dense row-major complex matrix. Sized for the small Hilbert spaces used
/// here (d <= 64); all products are the naive O(n^3) loops.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix diagonal(std::span<const Complex> values);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
    /// |a><b|.
    static ComplexMatrix outer(std::span<const Complex> a, std::span<const Complex> b);

    std::size_t rows() const noexcept {
        return rows_;
    }
    std::size_t cols() const noexcept {
        return cols_;
    }
    bool is_square() const noexcept {
        return rows_ == cols_;
    }
    std::span<const Complex> entries() const noexcept {
        return entries_;
    }

    Complex &operator()(std::size_t r, std::size_t c) {
        return entries_[r * cols_ + c];
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    std::vector<Complex> column(std::size_t c) const;
    ComplexMatrix adjoint() const;
    Complex trace() const;

    bool is_hermitian(double tol = kDefaultTolerance) const;
    bool is_unitary(double tol = kDefaultTolerance) const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
        return a += b;
    }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
        return a -= b;
    }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) {
        return a *= s;
    }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) {
        return a *= s;
    }
    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
    friend std::vector<Complex> operator*(const ComplexMatrix &a, std::span<const Complex> v);

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

/// sqrt(tr[A^dagger A]).
double hs_norm(const ComplexMatrix &a);

/// tr[A^dagger B].
Complex hs_inner(const ComplexMatrix &a, const ComplexMatrix &b);

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Eigenvalues ascending; eigenvector k is column k of `eigenvectors`.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;

    std::size_t dim() const noexcept {
        return eigenvalues.size();
    }
    /// V f(Lambda) V^dagger.
    template <typename F>
    ComplexMatrix apply(F &&f) const {
        std::vector<Complex> mapped;
        mapped.reserve(eigenvalues.size());
        for (double e : eigenvalues) {
            mapped.emplace_back(f(e));
        }
        return recompose(mapped);
    }
    ComplexMatrix recompose(std::span<const Complex> diagonal) const;
    ComplexMatrix reconstruct() const;
};

/// Cyclic complex Jacobi eigensolver for Hermitian matrices.
///
/// Each rotation first removes the phase of the pivot element and then applies
/// a real Givens rotation, so the iteration stays in the Hermitian manifold.
/// Eigenvalues come back sorted ascending with a stable sort over the final
/// diagonal, so ties keep their diagonal order. Each eigenvector is rescaled
/// so that its largest-magnitude component (first one on ties) is real and
/// positive. The result is a pure function of the input bits.
///
/// Throws NonSquare, or NonHermitian when ||A - A^dagger|| > tol * ||A||.
SpectralDecomposition hermitian_eig(const ComplexMatrix &a, double tol = kDefaultTolerance);

}  // namespace coherework

#endif
