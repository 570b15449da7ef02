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

#ifndef NLCONV_METRICS_HPP
#define NLCONV_METRICS_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "nlconv/core.hpp"
#include "nlconv/kernels.hpp"

namespace nlconv {

/// Four mode phases (input-1, input-2, output-1, output-2), each acting as
/// diag(1, e^{i phi}) on its qubit. Stored canonicalized into [0, 2pi).
class PhaseCorrection {
   public:
    PhaseCorrection() : phases_{0.0, 0.0, 0.0, 0.0} {}
    explicit PhaseCorrection(std::array<double, 4> phases);

    const std::array<double, 4> &phases() const { return phases_; }
    double operator[](std::size_t k) const { return phases_[k]; }

    /// Diagonal 16x16 unitary acting on H_in (x) H_out.
    ComplexMatrix unitary() const;
    PhaseCorrection inverse() const;

   private:
    std::array<double, 4> phases_;
};

/// D chi D^dagger with D the local phase unitary of `phases`.
ComplexMatrix conjugate_by_phases(const ComplexMatrix &chi, const PhaseCorrection &phases);

double purity(const DensityMatrix &m);
double purity(const ChoiProcess &chi);

/// (Tr sqrt(sqrt(a) b sqrt(a)))^2 for Hermitian PSD a, b.
double uhlmann_fidelity(const ComplexMatrix &a, const ComplexMatrix &b);

double fidelity(const DensityMatrix &a, const DensityMatrix &b);
double process_fidelity(const ChoiProcess &chi, const ChoiProcess &chi_th);

struct PhaseOptimizationOptions {
    int grid_points = 16;       // per phase
    double resolution = 1e-8;   // golden-section stopping width, radians
    int max_sweeps = 200;
    Execution execution = Execution::Serial;
};

struct PhaseOptimizationResult {
    double fidelity;
    double raw_fidelity;
    PhaseCorrection phases;
    long evaluations;
    int sweeps;
};

/// Maximizes process_fidelity(D chi D^dagger, chi_th) over the four mode
/// phases: full grid, then coordinate-wise golden-section refinement.
PhaseOptimizationResult phase_optimized_fidelity(
    const ChoiProcess &chi, const ChoiProcess &chi_th, const PhaseOptimizationOptions &options = {});

double concurrence(const DensityMatrix &m);
double log_negativity(const DensityMatrix &m);

/// Von Neumann entropy in bits of a Hermitian PSD matrix.
double von_neumann_entropy(const ComplexMatrix &m);

struct DiscordOptions {
    int theta_points = 20;  // polar grid over [0, pi], endpoints included
    int phi_points = 40;    // azimuthal grid over [0, 2pi)
    double resolution = 1e-9;
    int max_sweeps = 100;
    Execution execution = Execution::Serial;
};

struct DiscordResult {
    double discord;
    double mutual_information;
    double classical_correlation;
    double theta;  // optimal measurement direction on the Bloch sphere
    double phi;
};

/// Ollivier-Zurek discord with rank-1 projective measurements on
/// `measured_qubit` (0 or 1).
DiscordResult discord_details(const DensityMatrix &m, int measured_qubit, const DiscordOptions &options = {});
double discord(const DensityMatrix &m, int measured_qubit, const DiscordOptions &options = {});

enum class MetricName {
    Purity,
    Fidelity,
    ProcessFidelity,
    ProcessFidelityOptimized,
    Concurrence,
    LogNegativity,
    DiscordQ1,
    DiscordQ2,
    Trace,
    SuccessScale,
};

MetricName parse_metric_name(std::string_view name);
std::string_view metric_name_string(MetricName name);

using Estimate = std::variant<DensityMatrix, ChoiProcess>;
using MetricTarget = std::variant<std::monostate, DensityMatrix, ChoiProcess>;

struct MetricSpec {
    MetricName name;
    MetricTarget target;
};

/// Evaluates one named metric on an estimate. Fidelity-type metrics need a
/// target of the matching kind.
double evaluate_metric(const MetricSpec &spec, const Estimate &estimate);

struct MetricReport {
    std::string name;
    double value;
    std::optional<double> std;
    std::vector<std::pair<std::string, double>> metadata;
};

}  // namespace nlconv

#endif
