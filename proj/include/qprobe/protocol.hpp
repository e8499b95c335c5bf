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

#include <utility>
#include <vector>

#include "qprobe/probe.hpp"

namespace qprobe {

/// Interaction windows for a pulse train. The Fourier transform pulses are
/// logical markers only: the transform is applied as an instantaneous
/// unitary at both edges of every window.
struct PulseSchedule {
    std::vector<std::pair<double, double>> windows;  // non-overlapping, increasing

    void validate() const;
};

struct CycleReadout {
    double expected_a = 0.0;
    double pure_prediction = 0.0;
    double mixed_baseline = 0.0;
    double coherence_indicator = 0.0;
};

/// Applies the discrete Fourier unitary to one tensor factor, mapping the
/// pointer basis onto the conjugate basis.
QuantumState qft_system(const QuantumState& state, int factor);
QuantumState inverse_qft_system(const QuantumState& state, int factor);

/// One measurement cycle on a state of layout [n(system), n(probe), ...]
/// whose probe factor is freshly |A_0>: Fourier transform on the system,
/// probe interaction over the window, expected-value readout, inverse
/// transform. The inverse (not the transform itself) is applied afterwards
/// so restoration is exact for every n, not just n = 2. No collapse is
/// applied: readouts are expected values.
std::pair<QuantumState, CycleReadout> conjugate_measure_cycle(const ProbeSetup& setup,
                                                              const QuantumState& state,
                                                              std::pair<double, double> window,
                                                              const Vector& candidate_c);

/// Conjugate-basis expected value for a fully decohered system, evaluated by
/// the Born rule on rho = I/n. Independent of the populations of any
/// diagonal state (asserted by tests).
double mixed_baseline(const ProbeSetup& setup, double t);
double mixed_baseline_at_coupling(const ProbeSetup& setup, double coupling_integral);

/// Cycle readout the candidate pure state would produce, by the Born rule.
double pure_cycle_value(const ProbeSetup& setup, const Vector& c, double coupling_integral);

/// clamp(|observed - baseline| / max(|pure_pred - baseline|, 1e-12), 0, 1);
/// 1 means consistent with the pure candidate, 0 with full decoherence.
double coherence_indicator(double observed, double pure_pred, double baseline);

/// Runs one cycle per schedule window on a system(+environment) state that
/// does not yet carry a probe factor. Policy between cycles: the probe is
/// traced out and re-initialized to a fresh |A_0> (inserted as factor 1).
std::vector<CycleReadout> run_schedule(const ProbeSetup& setup, const QuantumState& system_state,
                                       const PulseSchedule& schedule, const Vector& candidate_c);

}  // namespace qprobe
