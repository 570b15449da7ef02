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

#ifndef NLCONV_PIPELINE_HPP
#define NLCONV_PIPELINE_HPP

// End-to-end experiment drivers. Every function is a pure function of its
// config: identical configs (seed included) give identical reports, and the
// report carries enough metadata to re-run it.
//
// The noisy channels and the imperfect cluster state are stand-ins built by
// calibrating a phenomenological noise template to published scalar figures;
// their outputs are pipeline-consistency numbers, not reproductions of any
// laboratory data.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nlconv/gate.hpp"
#include "nlconv/kernels.hpp"
#include "nlconv/noise.hpp"
#include "nlconv/tomography.hpp"

namespace nlconv {

/// Process figures reported for the experimental gate, used as calibration
/// targets and as reference columns.
struct ReferenceProcessFigures {
    double purity;
    double raw_fidelity;
    double optimized_fidelity;
};

ReferenceProcessFigures reference_process_figures(PresetName preset);

/// Channel noise template: mostly white noise plus input-mode phase errors.
NoiseSpec default_channel_noise_template();
/// Imperfect-cluster template: depolarizing plus per-qubit dephasing.
NoiseSpec default_cluster_noise_template();

struct ExperimentConfig {
    std::vector<PresetName> presets = conversion_presets();
    std::optional<GateSettings> settings;  // overrides the preset angles (single custom run)
    double mean_counts = 1000.0;
    std::uint64_t seed = 1;
    std::optional<NoiseSpec> noise;  // fixed noise, used when calibrate_noise is false
    bool calibrate_noise = false;    // scale noise_template to the reference raw fidelity
    NoiseSpec noise_template = default_channel_noise_template();
    int monte_carlo_samples = 1000;
    MleOptions mle;
    Execution execution = Execution::Parallel;

    double realistic_cluster_fidelity = 0.915;
    NoiseSpec cluster_noise_template = default_cluster_noise_template();
    double entangler_target_fidelity = 0.966;
    bool table3_sampled = false;  // reconstruct channels from simulated counts

    nlohmann::json to_json() const;
};

struct ReportRow {
    std::string label;
    double value;
    std::optional<double> std;  // present for every sampled value
    int n_samples = 0;
    std::optional<std::uint64_t> seed;
};

struct TableReport {
    std::string name;
    std::vector<ReportRow> rows;
    nlohmann::json metadata;

    const ReportRow &row(const std::string &label) const;
    double value(const std::string &label) const { return row(label).value; }

    nlohmann::json to_json() const;
    /// Columns: label,value,std,n_samples,seed.
    std::string to_csv() const;
};

/// FNV-1a of the compact JSON dump, as 16 hex digits.
std::string config_hash(const nlohmann::json &config);

/// Noise applied to a preset's channel under `config`: calibrated when
/// requested, otherwise the fixed spec (or none).
std::optional<CalibrationResult> channel_noise(const ExperimentConfig &config, PresetName preset);

/// The realistic cluster-state fixture: |C4> degraded by the cluster template
/// scaled to the configured fidelity.
CalibrationResult realistic_cluster_noise(const ExperimentConfig &config);

/// Every conversion-table row, analytic only.
TableReport run_table1();

/// Simulated process tomography per preset: purity, raw and phase-optimized
/// fidelity with Monte Carlo stds.
TableReport run_tomography_suite(const ExperimentConfig &config);

/// G(3pi/8, pi/8) on |-->, state tomography of the output.
TableReport run_entangler_demo(const ExperimentConfig &config);

/// G(pi/3, 0) on (1/2) 1 (x) |+><+|, entanglement and discord of the output.
TableReport run_discord_demo(const ExperimentConfig &config);

/// Conversions of the imperfect cluster state: operation fidelity (noisy vs
/// ideal channel on the same input) and total fidelity (noisy channel on the
/// imperfect input vs ideal channel on the ideal input).
TableReport run_table3(const ExperimentConfig &config);

}  // namespace nlconv

#endif
