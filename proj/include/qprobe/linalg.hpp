// Copyright 2026 The qprobe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qprobe {

using Complex = std::complex<double>;

// Dense row-major complex matrix. Everything in this library is desk-scale
// (ambient dimension a few hundred at most), so plain dense storage wins.
using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Default relative tolerance for linear-dependence decisions in operator
/// spans. Sits well above eigendecomposition round-off at these dimensions
/// and well below any structural commutator magnitude.
inline constexpr double kSpanTol = 1e-9;

bool is_finite(const Matrix& m);

Matrix identity(int n);

/// Frobenius inner product tr(a^dag b); the fixed inner product on operator
/// space. Span membership reduces to a least-squares residual under it.
Complex frobenius_inner(const Matrix& a, const Matrix& b);

/// Kronecker (tensor) product, size (a.rows*b.rows) x (a.cols*b.cols).
Matrix kron(const Matrix& a, const Matrix& b);

/// ab - ba. Throws std::invalid_argument on dimension mismatch.
Matrix commutator(const Matrix& a, const Matrix& b);

/// Iterated commutator: ad_h^0(c) = c, ad_h^j(c) = [h, ad_h^{j-1}(c)].
Matrix ad_power(const Matrix& h, const Matrix& c, int j);

/// exp(-i*theta*h) for Hermitian h, computed by eigendecomposition so the
/// result is unitary up to floating point. Throws std::invalid_argument if
/// h is not Hermitian (||h - h^dag||_F beyond tolerance).
Matrix propagator(const Matrix& h, double theta);

/// Discrete Fourier matrix, entry (k,l) = n^{-1/2} exp(2*pi*i*k*l/n).
Matrix dft_matrix(int n);

/// Orthonormal basis (Frobenius inner product) spanning a subspace of the
/// n x n complex matrices.
struct MatrixSpan {
    int dim = 0;                // ambient square-matrix dimension
    std::vector<Matrix> basis;  // pairwise orthonormal

    static MatrixSpan empty(int dim);

    int size() const { return static_cast<int>(basis.size()); }

    /// Orthogonal projection of m onto the span.
    Matrix project(const Matrix& m) const;

    /// ||m - project(m)||_F
    double residual_norm(const Matrix& m) const;
};

/// Projects m onto the orthogonal complement of s. If the residual norm
/// exceeds tol*||m||_F the normalized residual is appended and true is
/// returned; otherwise s is left unchanged and false is returned.
bool span_extend(MatrixSpan& s, const Matrix& m, double tol = kSpanTol);

}  // namespace qprobe
