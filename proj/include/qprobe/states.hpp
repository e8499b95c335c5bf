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

#include "qprobe/linalg.hpp"

namespace qprobe {

/// Ordered subsystem dimensions, e.g. [N_system, N_probe, N_env]. States and
/// operators carry one of these so tensor-factor operations know the shape.
struct FactorLayout {
    std::vector<int> dims;

    int total() const;
    int factors() const { return static_cast<int>(dims.size()); }
    bool operator==(const FactorLayout&) const = default;
};

/// A quantum state over a tensor-factor layout: either a pure state vector
/// (unit 2-norm) or a density matrix (Hermitian, unit trace, positive
/// semidefinite up to a -1e-9 eigenvalue floor). Values are immutable after
/// construction and all operations below are pure functions.
class QuantumState {
  public:
    static QuantumState pure(FactorLayout layout, Vector psi);
    static QuantumState density(FactorLayout layout, Matrix rho);

    bool is_pure() const { return pure_; }
    const FactorLayout& layout() const { return layout_; }
    int dim() const { return static_cast<int>(pure_ ? psi_.size() : rho_.rows()); }

    const Vector& vec() const;  // pure states only
    const Matrix& rho() const;  // density states only

    /// psi psi^dag for pure states, rho for densities.
    Matrix density_matrix() const;

    /// Same state as a density-represented QuantumState.
    QuantumState as_density() const;

  private:
    QuantumState() = default;

    FactorLayout layout_;
    bool pure_ = true;
    Vector psi_;
    Matrix rho_;
};

struct Operator {
    FactorLayout layout;
    Matrix mat;
};

Operator make_operator(FactorLayout layout, Matrix m);

/// Piecewise-constant real signal: values[i] holds on
/// [breakpoints[i], breakpoints[i+1]), the last value extends forever.
/// Before the first breakpoint the signal is zero.
struct PiecewiseConstant {
    std::vector<double> breakpoints;  // strictly increasing
    std::vector<double> values;       // same length as breakpoints

    static PiecewiseConstant constant(double v);

    double at(double t) const;
    /// Exact closed-form integral from breakpoints.front() to t.
    double integral(double t) const;
};

/// Bilinear control system: H(t) = drift + sum_i u_i(t) controls_i +
/// interaction, all sharing one layout.
struct DriftControlSystem {
    Operator drift;
    std::vector<Operator> controls;
    Operator interaction;
    std::vector<PiecewiseConstant> control_signals;  // one per control
};

/// Kronecker product of states with concatenated layout. All parts must be
/// pure or all density.
QuantumState tensor_state(const std::vector<QuantumState>& parts);

/// Standard partial trace keeping the listed factors (in their original
/// order). Pure input is promoted to a density first.
QuantumState partial_trace(const QuantumState& state, const std::vector<int>& keep);

/// <psi|C|psi> for pure states, tr(rho C) for densities.
Complex expectation(const QuantumState& state, const Operator& c);

/// Piecewise-constant propagation of H(t) = drift + sum u_i(t) H_i +
/// interaction over [t0, t1] in uniform steps of at most dt, control values
/// sampled at the left endpoint of each step.
QuantumState evolve(const DriftControlSystem& sys, const QuantumState& state, double t0, double t1,
                    double dt, double hbar = 1.0);

// -- tensor-factor plumbing -------------------------------------------------

/// I x ... x m x ... x I with m acting on the given factor.
Matrix embed_factor_operator(const FactorLayout& layout, int factor, const Matrix& m);

QuantumState apply_factor_operator(const QuantumState& state, int factor, const Matrix& m);

/// Applies a unitary acting jointly on factors 0 and 1 (identity elsewhere).
QuantumState apply_leading_pair_operator(const QuantumState& state, const Matrix& m);

/// Reorders tensor factors; order[k] names the old factor placed at new
/// position k.
QuantumState permute_factors(const QuantumState& state, const std::vector<int>& order);

/// Inserts a fresh uncorrelated factor at the given position. If either
/// input is a density the result is a density.
QuantumState insert_factor(const QuantumState& state, int position, const QuantumState& fresh);

double purity(const QuantumState& state);

/// |<a|b>| for two pure states; sqrt(<psi|rho|psi>) when one is a density;
/// tr sqrt(sqrt(a) b sqrt(a)) is deliberately not implemented (not needed).
double state_fidelity(const QuantumState& a, const QuantumState& b);

}  // namespace qprobe
