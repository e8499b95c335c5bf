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

#include <vector>

#include "qprobe/states.hpp"

namespace qprobe {

/// Externally modulated coupling strength g(t) >= 0 with an exact
/// closed-form integral, so completion of the premeasurement at
/// G(t) = hbar*c involves no quadrature error.
struct CouplingProfile {
    PiecewiseConstant rate;

    static CouplingProfile constant(double g);

    double value(double t) const { return rate.at(t); }

    /// G(t) = integral of g from 0 to t; non-decreasing.
    double integrated(double t) const { return rate.integral(t); }
};

/// Shared system/probe dimension N, pointer-basis eigenvalues, and the
/// coupling profile. Defaults are the integer spectra a_l = l, s_j = j for
/// which the premeasurement shift |A_k> -> |A_{k+j}> is exact at G = hbar*c.
struct ProbeSetup {
    int n = 0;
    std::vector<double> a;  // probe observable eigenvalues
    std::vector<double> s;  // system observable eigenvalues
    CouplingProfile coupling;
    double hbar = 1.0;

    double c() const;  // 2*pi/n

    /// a_l = l, s_j = j, constant g = hbar*c so that G(1) = hbar*c.
    static ProbeSetup standard(int n);

    void validate() const;
};

/// A_hat = sum_l a_l |A_l><A_l| on the probe factor.
Operator probe_observable(const ProbeSetup& setup);

/// P_hat = F diag(0..n-1) F^dag: diagonal in the conjugate basis |B_l>,
/// generates cyclic shifts of the pointer basis |A_k>.
Operator shift_operator(const ProbeSetup& setup);

/// The time-independent part s_hat (x) P_hat of H_SP = g(t) s_hat P_hat,
/// on layout [n, n]; the scalar g(t) enters at evolution time.
Operator interaction_hamiltonian(const ProbeSetup& setup);

/// Probe pointer state |A_0> as a single-factor state.
QuantumState probe_ground(const ProbeSetup& setup);

/// Branch amplitude sum alpha_jl = sum_k exp(2*pi*i*k*l/n - i*k*s_j*G(t)/hbar).
/// After premeasurement from |s_j>|A_0>, the |A_l> amplitude is alpha_jl / n.
Complex alpha(const ProbeSetup& setup, int j, int l, double t);
Complex alpha_at_coupling(const ProbeSetup& setup, int j, int l, double coupling_integral);

/// Evolves a state on layout [n(system), n(probe), ...] under g(t) s_hat P_hat
/// for duration t, using the exact accumulated phase per (s_j, shift
/// eigenvalue) pair. Factors beyond the first two are untouched.
QuantumState premeasure(const ProbeSetup& setup, const QuantumState& state, double t);
QuantumState premeasure_at_coupling(const ProbeSetup& setup, const QuantumState& state,
                                    double coupling_integral);

/// Born-rule expectation of the probe observable on the given state; the
/// probe lives on `probe_factor` (default 1, matching premeasure layouts).
double expected_probe_value(const ProbeSetup& setup, const QuantumState& state, int probe_factor = 1);

/// Closed-form expected value sum_l a_l sum_j |alpha_jl c_j|^2 for a direct
/// (pointer-basis) measurement, normalized by the total branch probability
/// so it matches the Born rule for every n.
double direct_expected_closed_form(const ProbeSetup& setup, const Vector& c, double t);
double direct_expected_closed_form_at_coupling(const ProbeSetup& setup, const Vector& c,
                                               double coupling_integral);

}  // namespace qprobe
