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

#include "qprobe/probe.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qprobe {

namespace {

// U = sum_j |s_j><s_j| (x) V_j with V_j = F diag_m(exp(-i s_j m G / hbar)) F^dag,
// the exact premeasurement propagator for integrated coupling G.
Matrix premeasure_unitary(const ProbeSetup& setup, double coupling_integral) {
    const int n = setup.n;
    const Matrix f = dft_matrix(n);
    Matrix u = Matrix::Zero(static_cast<long long>(n) * n, static_cast<long long>(n) * n);
    for (int j = 0; j < n; ++j) {
        Vector phases(n);
        for (int m = 0; m < n; ++m) {
            phases(m) = std::exp(Complex(0.0, -setup.s[j] * m * coupling_integral / setup.hbar));
        }
        u.block(static_cast<long long>(j) * n, static_cast<long long>(j) * n, n, n) =
            f * phases.asDiagonal() * f.adjoint();
    }
    return u;
}

}  // namespace

CouplingProfile CouplingProfile::constant(double g) {
    return CouplingProfile{PiecewiseConstant::constant(g)};
}

double ProbeSetup::c() const {
    if (n < 1) throw std::invalid_argument("ProbeSetup: n must be positive");
    return 2.0 * std::numbers::pi / n;
}

ProbeSetup ProbeSetup::standard(int n) {
    ProbeSetup setup;
    setup.n = n;
    setup.a.resize(n);
    setup.s.resize(n);
    for (int i = 0; i < n; ++i) {
        setup.a[i] = i;
        setup.s[i] = i;
    }
    setup.hbar = 1.0;
    setup.coupling = CouplingProfile::constant(setup.hbar * setup.c());
    return setup;
}

void ProbeSetup::validate() const {
    if (n < 1) throw std::invalid_argument("ProbeSetup: n must be positive");
    if (static_cast<int>(a.size()) != n || static_cast<int>(s.size()) != n) {
        throw std::invalid_argument("ProbeSetup: eigenvalue lists must have length n");
    }
    if (hbar <= 0.0) throw std::invalid_argument("ProbeSetup: hbar must be positive");
    for (double g : coupling.rate.values) {
        if (g < 0.0) throw std::invalid_argument("ProbeSetup: coupling strength must be non-negative");
    }
}

Operator probe_observable(const ProbeSetup& setup) {
    setup.validate();
    Matrix m = Matrix::Zero(setup.n, setup.n);
    for (int l = 0; l < setup.n; ++l) m(l, l) = setup.a[l];
    return make_operator(FactorLayout{{setup.n}}, std::move(m));
}

Operator shift_operator(const ProbeSetup& setup) {
    setup.validate();
    const Matrix f = dft_matrix(setup.n);
    Vector levels(setup.n);
    for (int l = 0; l < setup.n; ++l) levels(l) = static_cast<double>(l);
    Matrix p = f * levels.asDiagonal() * f.adjoint();
    p = (p + Matrix(p.adjoint())) / 2.0;
    return make_operator(FactorLayout{{setup.n}}, std::move(p));
}

Operator interaction_hamiltonian(const ProbeSetup& setup) {
    setup.validate();
    Matrix s_hat = Matrix::Zero(setup.n, setup.n);
    for (int j = 0; j < setup.n; ++j) s_hat(j, j) = setup.s[j];
    return make_operator(FactorLayout{{setup.n, setup.n}}, kron(s_hat, shift_operator(setup).mat));
}

QuantumState probe_ground(const ProbeSetup& setup) {
    Vector psi = Vector::Zero(setup.n);
    psi(0) = 1.0;
    return QuantumState::pure(FactorLayout{{setup.n}}, std::move(psi));
}

Complex alpha(const ProbeSetup& setup, int j, int l, double t) {
    return alpha_at_coupling(setup, j, l, setup.coupling.integrated(t));
}

Complex alpha_at_coupling(const ProbeSetup& setup, int j, int l, double coupling_integral) {
    setup.validate();
    if (j < 0 || j >= setup.n || l < 0 || l >= setup.n) {
        throw std::invalid_argument("alpha: index out of range");
    }
    Complex acc = 0.0;
    for (int k = 0; k < setup.n; ++k) {
        const double arg =
            2.0 * std::numbers::pi * k * l / setup.n - k * setup.s[j] * coupling_integral / setup.hbar;
        acc += Complex(std::cos(arg), std::sin(arg));
    }
    return acc;
}

QuantumState premeasure(const ProbeSetup& setup, const QuantumState& state, double t) {
    return premeasure_at_coupling(setup, state, setup.coupling.integrated(t));
}

QuantumState premeasure_at_coupling(const ProbeSetup& setup, const QuantumState& state,
                                    double coupling_integral) {
    setup.validate();
    const auto& dims = state.layout().dims;
    if (dims.size() < 2 || dims[0] != setup.n || dims[1] != setup.n) {
        throw std::invalid_argument("premeasure: state layout must start with [n(system), n(probe)]");
    }
    return apply_leading_pair_operator(state, premeasure_unitary(setup, coupling_integral));
}

double expected_probe_value(const ProbeSetup& setup, const QuantumState& state, int probe_factor) {
    setup.validate();
    const auto& layout = state.layout();
    if (probe_factor < 0 || probe_factor >= layout.factors() || layout.dims[probe_factor] != setup.n) {
        throw std::invalid_argument("expected_probe_value: probe factor not found in layout");
    }
    Matrix a_hat = Matrix::Zero(setup.n, setup.n);
    for (int l = 0; l < setup.n; ++l) a_hat(l, l) = setup.a[l];
    const Operator embedded = make_operator(layout, embed_factor_operator(layout, probe_factor, a_hat));
    return expectation(state, embedded).real();
}

double direct_expected_closed_form(const ProbeSetup& setup, const Vector& c, double t) {
    return direct_expected_closed_form_at_coupling(setup, c, setup.coupling.integrated(t));
}

double direct_expected_closed_form_at_coupling(const ProbeSetup& setup, const Vector& c,
                                               double coupling_integral) {
    setup.validate();
    if (c.size() != setup.n) throw std::invalid_argument("direct_expected_closed_form: amplitude length mismatch");
    double num = 0.0, den = 0.0;
    for (int l = 0; l < setup.n; ++l) {
        for (int j = 0; j < setup.n; ++j) {
            const double w = std::norm(alpha_at_coupling(setup, j, l, coupling_integral) * c(j));
            num += setup.a[l] * w;
            den += w;
        }
    }
    if (den <= 0.0) throw std::runtime_error("direct_expected_closed_form: vanishing total probability");
    return num / den;
}

}  // namespace qprobe
