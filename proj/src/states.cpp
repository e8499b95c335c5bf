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

#include "qprobe/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qprobe {

namespace {

std::vector<long long> strides_of(const std::vector<int>& dims) {
    std::vector<long long> strides(dims.size(), 1);
    for (int f = static_cast<int>(dims.size()) - 2; f >= 0; --f) {
        strides[f] = strides[f + 1] * dims[f + 1];
    }
    return strides;
}

Vector kron_vec(const Vector& a, const Vector& b) {
    Vector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

void check_state_finite(const Vector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v(i).real()) || !std::isfinite(v(i).imag())) {
            throw std::invalid_argument("QuantumState: non-finite entries");
        }
    }
}

}  // namespace

int FactorLayout::total() const {
    int t = 1;
    for (int d : dims) {
        if (d <= 0) throw std::invalid_argument("FactorLayout: dimensions must be positive");
        t *= d;
    }
    return t;
}

QuantumState QuantumState::pure(FactorLayout layout, Vector psi) {
    if (psi.size() != layout.total()) {
        throw std::invalid_argument("QuantumState::pure: vector length does not match layout");
    }
    check_state_finite(psi);
    if (std::abs(psi.norm() - 1.0) > 1e-10) {
        throw std::invalid_argument("QuantumState::pure: state vector is not normalized");
    }
    QuantumState s;
    s.layout_ = std::move(layout);
    s.pure_ = true;
    s.psi_ = std::move(psi);
    return s;
}

QuantumState QuantumState::density(FactorLayout layout, Matrix rho) {
    const int d = layout.total();
    if (rho.rows() != d || rho.cols() != d) {
        throw std::invalid_argument("QuantumState::density: matrix shape does not match layout");
    }
    if (!is_finite(rho)) throw std::invalid_argument("QuantumState::density: non-finite entries");
    if ((rho - rho.adjoint()).norm() > 1e-10 * std::max(1.0, rho.norm())) {
        throw std::invalid_argument("QuantumState::density: matrix is not Hermitian");
    }
    if (std::abs(rho.trace().real() - 1.0) > 1e-10 || std::abs(rho.trace().imag()) > 1e-10) {
        throw std::invalid_argument("QuantumState::density: trace is not 1");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-9) {
        throw std::invalid_argument("QuantumState::density: matrix is not positive semidefinite");
    }
    QuantumState s;
    s.layout_ = std::move(layout);
    s.pure_ = false;
    s.rho_ = std::move(rho);
    return s;
}

const Vector& QuantumState::vec() const {
    if (!pure_) throw std::logic_error("QuantumState::vec: state is a density matrix");
    return psi_;
}

const Matrix& QuantumState::rho() const {
    if (pure_) throw std::logic_error("QuantumState::rho: state is a pure vector");
    return rho_;
}

Matrix QuantumState::density_matrix() const {
    if (pure_) return psi_ * psi_.adjoint();
    return rho_;
}

QuantumState QuantumState::as_density() const {
    if (!pure_) return *this;
    return QuantumState::density(layout_, density_matrix());
}

Operator make_operator(FactorLayout layout, Matrix m) {
    const int d = layout.total();
    if (m.rows() != d || m.cols() != d) {
        throw std::invalid_argument("make_operator: matrix shape does not match layout");
    }
    if (!is_finite(m)) throw std::invalid_argument("make_operator: non-finite entries");
    return Operator{std::move(layout), std::move(m)};
}

PiecewiseConstant PiecewiseConstant::constant(double v) { return PiecewiseConstant{{0.0}, {v}}; }

double PiecewiseConstant::at(double t) const {
    if (breakpoints.empty() || breakpoints.size() != values.size()) {
        throw std::invalid_argument("PiecewiseConstant: breakpoints/values mismatch");
    }
    if (t < breakpoints.front()) return 0.0;
    auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), t);
    return values[static_cast<size_t>(std::distance(breakpoints.begin(), it)) - 1];
}

double PiecewiseConstant::integral(double t) const {
    if (breakpoints.empty() || breakpoints.size() != values.size()) {
        throw std::invalid_argument("PiecewiseConstant: breakpoints/values mismatch");
    }
    if (t <= breakpoints.front()) return 0.0;
    double acc = 0.0;
    for (size_t k = 0; k < breakpoints.size(); ++k) {
        const double seg_start = breakpoints[k];
        const double seg_end = (k + 1 < breakpoints.size()) ? std::min(breakpoints[k + 1], t) : t;
        if (seg_end <= seg_start) break;
        acc += values[k] * (seg_end - seg_start);
        if (seg_end == t) break;
    }
    return acc;
}

QuantumState tensor_state(const std::vector<QuantumState>& parts) {
    if (parts.empty()) throw std::invalid_argument("tensor_state: empty input");
    const bool pure = parts.front().is_pure();
    for (const auto& p : parts) {
        if (p.is_pure() != pure) {
            throw std::invalid_argument("tensor_state: mixed pure/density input");
        }
    }
    FactorLayout layout;
    for (const auto& p : parts) {
        layout.dims.insert(layout.dims.end(), p.layout().dims.begin(), p.layout().dims.end());
    }
    if (pure) {
        Vector psi = parts.front().vec();
        for (size_t k = 1; k < parts.size(); ++k) psi = kron_vec(psi, parts[k].vec());
        return QuantumState::pure(std::move(layout), std::move(psi));
    }
    Matrix rho = parts.front().rho();
    for (size_t k = 1; k < parts.size(); ++k) rho = kron(rho, parts[k].rho());
    return QuantumState::density(std::move(layout), std::move(rho));
}

QuantumState partial_trace(const QuantumState& state, const std::vector<int>& keep) {
    const auto& dims = state.layout().dims;
    const int nf = state.layout().factors();
    if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
    std::vector<bool> kept(nf, false);
    for (int f : keep) {
        if (f < 0 || f >= nf) throw std::invalid_argument("partial_trace: invalid factor index");
        if (kept[f]) throw std::invalid_argument("partial_trace: duplicate factor index");
        kept[f] = true;
    }

    std::vector<int> keep_dims, trace_dims;
    std::vector<long long> keep_strides, trace_strides;
    const auto strides = strides_of(dims);
    for (int f = 0; f < nf; ++f) {
        if (kept[f]) {
            keep_dims.push_back(dims[f]);
            keep_strides.push_back(strides[f]);
        } else {
            trace_dims.push_back(dims[f]);
            trace_strides.push_back(strides[f]);
        }
    }
    const long long dk = std::accumulate(keep_dims.begin(), keep_dims.end(), 1LL, std::multiplies<>());
    const long long dt = std::accumulate(trace_dims.begin(), trace_dims.end(), 1LL, std::multiplies<>());

    // flat offset of a multi-index within the original state, per group
    auto offset = [](long long idx, const std::vector<int>& gdims, const std::vector<long long>& gstrides) {
        long long off = 0;
        for (int f = static_cast<int>(gdims.size()) - 1; f >= 0; --f) {
            off += (idx % gdims[f]) * gstrides[f];
            idx /= gdims[f];
        }
        return off;
    };
    std::vector<long long> keep_off(dk), trace_off(dt);
    for (long long i = 0; i < dk; ++i) keep_off[i] = offset(i, keep_dims, keep_strides);
    for (long long i = 0; i < dt; ++i) trace_off[i] = offset(i, trace_dims, trace_strides);

    const Matrix rho = state.density_matrix();
    Matrix out = Matrix::Zero(dk, dk);
    for (long long a = 0; a < dk; ++a) {
        for (long long b = 0; b < dk; ++b) {
            Complex acc = 0.0;
            for (long long t = 0; t < dt; ++t) {
                acc += rho(keep_off[a] + trace_off[t], keep_off[b] + trace_off[t]);
            }
            out(a, b) = acc;
        }
    }
    // round off tiny Hermiticity defects from summation order
    out = (out + Matrix(out.adjoint())) / 2.0;
    return QuantumState::density(FactorLayout{keep_dims}, std::move(out));
}

Complex expectation(const QuantumState& state, const Operator& c) {
    if (c.layout.total() != state.dim()) throw std::invalid_argument("expectation: dimension mismatch");
    if (state.is_pure()) return state.vec().dot(c.mat * state.vec());
    return (state.rho() * c.mat).trace();
}

QuantumState evolve(const DriftControlSystem& sys, const QuantumState& state, double t0, double t1,
                    double dt, double hbar) {
    if (dt <= 0.0) throw std::invalid_argument("evolve: dt must be positive");
    if (t1 < t0) throw std::invalid_argument("evolve: t1 < t0");
    if (hbar <= 0.0) throw std::invalid_argument("evolve: hbar must be positive");
    if (sys.controls.size() != sys.control_signals.size()) {
        throw std::invalid_argument("evolve: controls/signals size mismatch");
    }
    const int d = state.dim();
    if (sys.drift.mat.rows() != d || sys.interaction.mat.rows() != d) {
        throw std::invalid_argument("evolve: operator dimension mismatch");
    }
    for (const auto& ctl : sys.controls) {
        if (ctl.mat.rows() != d) throw std::invalid_argument("evolve: operator dimension mismatch");
    }
    if (t1 == t0) return state;

    const long long steps = std::max<long long>(1, static_cast<long long>(std::ceil((t1 - t0) / dt - 1e-12)));
    const double h = (t1 - t0) / static_cast<double>(steps);

    Vector psi;
    Matrix rho;
    if (state.is_pure()) psi = state.vec();
    else rho = state.rho();

    // The step propagator only changes when a control value changes, so it
    // is rebuilt lazily across the piecewise-constant intervals.
    std::vector<double> u_prev;
    Matrix u_step;
    bool have_step = false;
    for (long long k = 0; k < steps; ++k) {
        const double t = t0 + static_cast<double>(k) * h;
        std::vector<double> u(sys.controls.size());
        for (size_t i = 0; i < u.size(); ++i) u[i] = sys.control_signals[i].at(t);
        if (!have_step || u != u_prev) {
            Matrix hmat = sys.drift.mat + sys.interaction.mat;
            for (size_t i = 0; i < u.size(); ++i) hmat += u[i] * sys.controls[i].mat;
            u_step = propagator(hmat, h / hbar);
            u_prev = u;
            have_step = true;
        }
        if (state.is_pure()) psi = u_step * psi;
        else rho = u_step * rho * u_step.adjoint();
    }

    if (state.is_pure()) return QuantumState::pure(state.layout(), std::move(psi));
    rho = (rho + Matrix(rho.adjoint())) / 2.0;
    return QuantumState::density(state.layout(), std::move(rho));
}

Matrix embed_factor_operator(const FactorLayout& layout, int factor, const Matrix& m) {
    if (factor < 0 || factor >= layout.factors()) {
        throw std::invalid_argument("embed_factor_operator: invalid factor");
    }
    if (m.rows() != layout.dims[factor] || m.cols() != layout.dims[factor]) {
        throw std::invalid_argument("embed_factor_operator: operator does not match factor dimension");
    }
    long long before = 1, after = 1;
    for (int f = 0; f < factor; ++f) before *= layout.dims[f];
    for (int f = factor + 1; f < layout.factors(); ++f) after *= layout.dims[f];
    return kron(kron(identity(static_cast<int>(before)), m), identity(static_cast<int>(after)));
}

QuantumState apply_factor_operator(const QuantumState& state, int factor, const Matrix& m) {
    const Matrix u = embed_factor_operator(state.layout(), factor, m);
    if (state.is_pure()) return QuantumState::pure(state.layout(), u * state.vec());
    return QuantumState::density(state.layout(), Matrix(u * state.rho() * u.adjoint()));
}

QuantumState apply_leading_pair_operator(const QuantumState& state, const Matrix& m) {
    if (state.layout().factors() < 2) {
        throw std::invalid_argument("apply_leading_pair_operator: layout has fewer than two factors");
    }
    const long long d01 = static_cast<long long>(state.layout().dims[0]) * state.layout().dims[1];
    if (m.rows() != d01 || m.cols() != d01) {
        throw std::invalid_argument("apply_leading_pair_operator: operator does not match leading factors");
    }
    long long rest = 1;
    for (int f = 2; f < state.layout().factors(); ++f) rest *= state.layout().dims[f];
    const Matrix u = kron(m, identity(static_cast<int>(rest)));
    if (state.is_pure()) return QuantumState::pure(state.layout(), u * state.vec());
    return QuantumState::density(state.layout(), Matrix(u * state.rho() * u.adjoint()));
}

QuantumState permute_factors(const QuantumState& state, const std::vector<int>& order) {
    const auto& dims = state.layout().dims;
    const int nf = state.layout().factors();
    if (static_cast<int>(order.size()) != nf) throw std::invalid_argument("permute_factors: order size mismatch");
    {
        std::vector<bool> seen(nf, false);
        for (int f : order) {
            if (f < 0 || f >= nf || seen[f]) throw std::invalid_argument("permute_factors: invalid permutation");
            seen[f] = true;
        }
    }

    FactorLayout new_layout;
    new_layout.dims.resize(nf);
    for (int k = 0; k < nf; ++k) new_layout.dims[k] = dims[order[k]];

    const auto old_strides = strides_of(dims);
    const long long total = state.dim();
    std::vector<long long> to_old(total);
    for (long long idx = 0; idx < total; ++idx) {
        long long rem = idx, old_idx = 0;
        for (int k = nf - 1; k >= 0; --k) {
            old_idx += (rem % new_layout.dims[k]) * old_strides[order[k]];
            rem /= new_layout.dims[k];
        }
        to_old[idx] = old_idx;
    }

    if (state.is_pure()) {
        Vector out(total);
        for (long long i = 0; i < total; ++i) out(i) = state.vec()(to_old[i]);
        return QuantumState::pure(std::move(new_layout), std::move(out));
    }
    Matrix out(total, total);
    for (long long i = 0; i < total; ++i) {
        for (long long j = 0; j < total; ++j) out(i, j) = state.rho()(to_old[i], to_old[j]);
    }
    return QuantumState::density(std::move(new_layout), std::move(out));
}

QuantumState insert_factor(const QuantumState& state, int position, const QuantumState& fresh) {
    const int nf = state.layout().factors();
    const int mf = fresh.layout().factors();
    if (position < 0 || position > nf) throw std::invalid_argument("insert_factor: invalid position");

    QuantumState joint = (state.is_pure() == fresh.is_pure())
                             ? tensor_state({state, fresh})
                             : tensor_state({state.as_density(), fresh.as_density()});

    std::vector<int> order;
    for (int f = 0; f < position; ++f) order.push_back(f);
    for (int f = 0; f < mf; ++f) order.push_back(nf + f);
    for (int f = position; f < nf; ++f) order.push_back(f);
    return permute_factors(joint, order);
}

double purity(const QuantumState& state) {
    if (state.is_pure()) return 1.0;
    return (state.rho() * state.rho()).trace().real();
}

double state_fidelity(const QuantumState& a, const QuantumState& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("state_fidelity: dimension mismatch");
    if (a.is_pure() && b.is_pure()) return std::abs(a.vec().dot(b.vec()));
    if (a.is_pure()) return std::sqrt(std::max(0.0, a.vec().dot(b.rho() * a.vec()).real()));
    if (b.is_pure()) return state_fidelity(b, a);
    throw std::invalid_argument("state_fidelity: density-density fidelity not supported");
}

}  // namespace qprobe
