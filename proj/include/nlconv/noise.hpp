// Copyright 2026 The nlconv Authors
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

#ifndef NLCONV_NOISE_HPP
#define NLCONV_NOISE_HPP

#include <functional>
#include <optional>

#include "nlconv/core.hpp"
#include "nlconv/metrics.hpp"

namespace nlconv {

/// Phenomenological imperfections. On a channel: systematic mode phases,
/// then Z dephasing on each output qubit, then mixing with the completely
/// depolarizing channel. On a state: phases on the first four qubits,
/// dephasing on every qubit, then mixing with the maximally mixed state.
struct NoiseSpec {
    double depolarizing_p = 0.0;
    double dephasing_p = 0.0;
    std::optional<PhaseCorrection> mode_phases;

    /// Every parameter multiplied by `magnitude`.
    NoiseSpec scaled(double magnitude) const;
    void validate() const;
};

/// Unit-trace Choi matrix of rho -> Tr(rho) 1/4, success scale 1.
ChoiProcess white_noise_choi();

ChoiProcess depolarize_choi(const ChoiProcess &chi, double p);

/// (1-p) chi + p (1 (x) Z_q) chi (1 (x) Z_q) for both output qubits q.
ChoiProcess dephase_choi_outputs(const ChoiProcess &chi, double p);

ChoiProcess apply_mode_phases(const ChoiProcess &chi, const PhaseCorrection &phases);

ChoiProcess apply_noise(const ChoiProcess &chi, const NoiseSpec &noise);

/// rho -> (1-p) rho + p Z_q rho Z_q.
DensityMatrix dephase_state(const DensityMatrix &rho, double p, int qubit);

/// rho -> (1-p) rho + p 1/d.
DensityMatrix depolarize_state(const DensityMatrix &rho, double p);

DensityMatrix apply_noise(const DensityMatrix &rho, const NoiseSpec &noise);

struct CalibrationResult {
    NoiseSpec noise;
    double magnitude;  // multiplier applied to the template
    double achieved;   // fidelity at the returned magnitude
};

/// Finds the smallest magnitude m such that fidelity_at(m) == target within
/// `tolerance`, scanning [0, max_magnitude] for the first bracket and then
/// bisecting. Throws NoSolution when the target is not reachable.
CalibrationResult calibrate_magnitude(double target, const NoiseSpec &template_spec,
                                      const std::function<double(const NoiseSpec &)> &fidelity_at,
                                      double tolerance = 1e-12);

/// Calibrates `template_spec` so the raw process fidelity of the noisy
/// channel against chi_th equals the target.
CalibrationResult calibrate_noise_to_fidelity(double target_raw_fidelity, const ChoiProcess &chi_th,
                                              const NoiseSpec &template_spec);

/// Same for a state: fidelity of apply_noise(ideal) against ideal.
CalibrationResult calibrate_state_noise_to_fidelity(double target_fidelity, const DensityMatrix &ideal,
                                                    const NoiseSpec &template_spec);

}  // namespace nlconv

#endif
