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

#include "qprobe/linalg.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qprobe {

namespace {

void require_square_same(const Matrix& a, const Matrix& b, const char* who) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
        throw std::invalid_argument(std::string(who) + ": operands must be square and of equal dimension");
    }
}

}  // namespace

bool is_finite(const Matrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
        }
    }
    return true;
}

Matrix identity(int n) { return Matrix::Identity(n, n); }

Complex frobenius_inner(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("frobenius_inner: shape mismatch");
    }
    return (a.adjoint() * b).trace();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
    require_square_same(a, b, "commutator");
    return a * b - b * a;
}

Matrix ad_power(const Matrix& h, const Matrix& c, int j) {
    require_square_same(h, c, "ad_power");
    if (j < 0) throw std::invalid_argument("ad_power: negative power");
    Matrix out = c;
    for (int k = 0; k < j; ++k) out = commutator(h, out);
    return out;
}

Matrix propagator(const Matrix& h, double theta) {
    if (h.rows() != h.cols()) throw std::invalid_argument("propagator: matrix must be square");
    const double herm_defect = (h - h.adjoint()).norm();
    if (herm_defect > 1e-10 * std::max(1.0, h.norm())) {
        throw std::invalid_argument("propagator: generator is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    if (es.info() != Eigen::Success) throw std::runtime_error("propagator: eigendecomposition failed");
    const auto& vals = es.eigenvalues();
    Vector phases(vals.size());
    for (Eigen::Index k = 0; k < vals.size(); ++k) {
        phases(k) = std::exp(Complex(0.0, -theta * vals(k)));
    }
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix dft_matrix(int n) {
    if (n < 1) throw std::invalid_argument("dft_matrix: n must be positive");
    Matrix f(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
            // exp(2*pi*i*k*l/n) with the product reduced mod n to keep the
            // argument small for large k*l
            const double arg = 2.0 * std::numbers::pi * static_cast<double>((static_cast<long long>(k) * l) % n) / n;
            f(k, l) = scale * Complex(std::cos(arg), std::sin(arg));
        }
    }
    return f;
}

MatrixSpan MatrixSpan::empty(int dim) {
    MatrixSpan s;
    s.dim = dim;
    return s;
}

Matrix MatrixSpan::project(const Matrix& m) const {
    Matrix out = Matrix::Zero(dim, dim);
    for (const Matrix& b : basis) out += frobenius_inner(b, m) * b;
    return out;
}

double MatrixSpan::residual_norm(const Matrix& m) const { return (m - project(m)).norm(); }

bool span_extend(MatrixSpan& s, const Matrix& m, double tol) {
    if (m.rows() != s.dim || m.cols() != s.dim) {
        throw std::invalid_argument("span_extend: ambient dimension mismatch");
    }
    const double scale = m.norm();
    if (scale == 0.0) return false;
    Matrix residual = m - s.project(m);
    // One re-orthogonalization pass keeps the basis orthonormal to ~1e-15
    // even when m is nearly dependent on it.
    residual -= s.project(residual);
    const double rnorm = residual.norm();
    if (rnorm <= tol * scale) return false;
    s.basis.push_back(residual / rnorm);
    return true;
}

}  // namespace qprobe
