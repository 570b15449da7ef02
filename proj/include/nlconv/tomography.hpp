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

#ifndef NLCONV_TOMOGRAPHY_HPP
#define NLCONV_TOMOGRAPHY_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nlconv/core.hpp"
#include "nlconv/kernels.hpp"
#include "nlconv/metrics.hpp"

namespace nlconv {

enum class PrepLabel { H, V, Plus, Minus, R, L };
enum class BasisLabel { Z, X, Y };

char prep_label_char(PrepLabel label);
PrepLabel parse_prep_label(std::string_view label);
char basis_label_char(BasisLabel label);
BasisLabel parse_basis_label(std::string_view label);

struct PreparationSetting {
    std::array<PrepLabel, 2> labels;

    PureState state() const;
    std::string str() const;
    friend bool operator==(const PreparationSetting &, const PreparationSetting &) = default;
};

/// Product measurement basis. Outcome index o = 2*b1 + b2, bit 0 selecting
/// the first-listed basis state (H, +, R) of each qubit.
struct MeasurementSetting {
    std::array<BasisLabel, 2> bases;

    ComplexVector outcome_vector(int outcome) const;
    ComplexMatrix projector(int outcome) const;
    std::string str() const;
    friend bool operator==(const MeasurementSetting &, const MeasurementSetting &) = default;
};

struct SettingPair {
    PreparationSetting prep;
    MeasurementSetting basis;
};

inline constexpr int kPreparationCount = 36;
inline constexpr int kBasisCount = 9;
inline constexpr int kSettingCount = kPreparationCount * kBasisCount;

std::vector<PreparationSetting> all_preparations();
std::vector<MeasurementSetting> all_bases();

/// All 324 (preparation, basis) pairs, preparation-major; labels ordered
/// H,V,+,-,R,L and Z,X,Y.
std::vector<SettingPair> enumerate_settings();

/// Coincidence success probability of the channel on a preparation.
double success_probability(const ChoiProcess &chi, const PreparationSetting &prep);

/// Outcome probabilities conditioned on coincidence success.
std::array<double, 4> outcome_probabilities(
    const ChoiProcess &chi, const PreparationSetting &prep, const MeasurementSetting &basis);
std::array<double, 4> outcome_probabilities(const DensityMatrix &rho, const MeasurementSetting &basis);

struct SettingRecord {
    std::optional<PreparationSetting> prep;  // absent for state datasets of a mixed input
    MeasurementSetting basis;
    std::array<std::int64_t, 4> counts;
};

struct CoincidenceDataset {
    double mean_counts = 0.0;
    std::optional<std::uint64_t> seed;
    std::string generator;
    std::vector<SettingRecord> records;

    std::int64_t total_counts() const;
};

enum class DatasetKind { State, Process };

/// Checks completeness: 9 bases for one preparation (state) or all 324 pairs
/// (process), each exactly once, with nonnegative counts.
DatasetKind validate_dataset(const CoincidenceDataset &data);

/// Process tomography counts: expected count mean_counts * success * p(o),
/// drawn from a seeded Poisson sampler.
CoincidenceDataset simulate_counts(const ChoiProcess &chi, double mean_counts, std::uint64_t seed);

/// State tomography counts for a two-qubit output state that was produced
/// with the given success probability.
CoincidenceDataset simulate_state_counts(const DensityMatrix &rho, double mean_counts, std::uint64_t seed,
                                         double success_probability = 1.0,
                                         std::optional<PreparationSetting> prep = std::nullopt);

/// Redraws every count as Poisson with the observed count as mean.
CoincidenceDataset resample_counts(const CoincidenceDataset &data, std::uint64_t seed);

struct MleOptions {
    double tolerance = 1e-10;  // stop when the log-likelihood gain drops below this
    int max_iterations = 5000;
};

template <class Estimate>
struct ReconstructionReport {
    Estimate estimate;
    int iterations;
    double final_log_likelihood;  // sum_j f_j log q_j with relative frequencies f_j
    bool converged;
    std::vector<double> log_likelihood;  // per iteration, starting value first
    int diluted_steps;                   // iterations that needed a damped R step
};

/// R rho R iteration from the maximally mixed state.
ReconstructionReport<DensityMatrix> mle_density_matrix(const CoincidenceDataset &data, const MleOptions &options = {});

/// R chi R iteration on the 16x16 Choi matrix with effects rho_prep^T (x) Pi.
/// The returned success_scale is total_counts / (324 * mean_counts).
ReconstructionReport<ChoiProcess> mle_process_matrix(const CoincidenceDataset &data, const MleOptions &options = {});

/// Success probability estimated from a state dataset: total / (9 * mean_counts).
double estimated_success_probability(const CoincidenceDataset &data);

/// Reconstructs whichever kind of estimate the dataset supports.
Estimate reconstruct(const CoincidenceDataset &data, const MleOptions &options = {});

using SampleEvaluator = std::function<std::vector<double>(const CoincidenceDataset &)>;

/// Parametric bootstrap driver: sample i redraws all counts with
/// derive_seed(seed, i) and passes them to `evaluate`. Row i of the result
/// belongs to sample i regardless of execution order.
std::vector<std::vector<double>> bootstrap_samples(const CoincidenceDataset &data, int samples, std::uint64_t seed,
                                                   Execution execution, const SampleEvaluator &evaluate);

struct SampleStats {
    double mean;
    double std;  // n - 1 denominator
};

SampleStats sample_stats(std::span<const double> values);

struct MonteCarloOptions {
    int samples = 1000;
    std::uint64_t seed = 0;
    MleOptions mle;
    Execution execution = Execution::Serial;
};

struct MonteCarloSummary {
    MetricName metric;
    double mean;
    double std;
    std::vector<double> samples;
};

/// Parametric bootstrap: each sample redraws all counts, reconstructs and
/// evaluates every metric. Sample i uses derive_seed(seed, i), so results do
/// not depend on execution order.
std::vector<MonteCarloSummary> monte_carlo_metrics(
    const CoincidenceDataset &data, std::span<const MetricSpec> metrics, const MonteCarloOptions &options);

MonteCarloSummary monte_carlo_metrics(
    const CoincidenceDataset &data, int n_samples, const MetricSpec &metric, std::uint64_t seed);

}  // namespace nlconv

#endif
