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

// Serial reference vs OpenMP for the three data-parallel hot spots: the
// phase-optimization grid, the discord measurement grid and the Monte Carlo
// bootstrap loop. Arg(0) = serial, Arg(1) = parallel.

#include <benchmark/benchmark.h>

#include "nlconv/gate.hpp"
#include "nlconv/metrics.hpp"
#include "nlconv/noise.hpp"
#include "nlconv/tomography.hpp"

namespace {

using namespace nlconv;

Execution exec_of(const benchmark::State &state) { return state.range(0) ? Execution::Parallel : Execution::Serial; }

void BM_PhaseGrid(benchmark::State &state) {
    ChoiProcess th = ideal_choi(preset(PresetName::Ghz).settings);
    ChoiProcess chi = apply_mode_phases(depolarize_choi(th, 0.1), PhaseCorrection({0.4, 1.1, -0.7, 2.0}));
    PhaseOptimizationOptions opt;
    opt.execution = exec_of(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(phase_optimized_fidelity(chi, th, opt).fidelity);
    }
}
BENCHMARK(BM_PhaseGrid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DiscordGrid(benchmark::State &state) {
    DensityMatrix rho_in(tensor_product(DensityMatrix::maximally_mixed(1).matrix(),
                                        DensityMatrix::from_pure(PureState::product("+")).matrix()));
    DensityMatrix out = apply_choi_channel(rho_in, ideal_choi(preset(PresetName::DiscordDemo).settings)).state;
    DiscordOptions opt;
    opt.theta_points = 80;
    opt.phi_points = 160;
    opt.execution = exec_of(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(discord(out, 1, opt));
    }
}
BENCHMARK(BM_DiscordGrid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MonteCarlo(benchmark::State &state) {
    ChoiProcess th = ideal_choi(preset(PresetName::Ghz).settings);
    CoincidenceDataset data = simulate_counts(depolarize_choi(th, 0.1), 1e4, 5);
    MonteCarloOptions opt;
    opt.samples = 16;
    opt.seed = 9;
    opt.execution = exec_of(state);
    MetricSpec spec{MetricName::ProcessFidelity, th};
    for (auto _ : state) {
        benchmark::DoNotOptimize(monte_carlo_metrics(data, std::span<const MetricSpec>(&spec, 1), opt));
    }
}
BENCHMARK(BM_MonteCarlo)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
