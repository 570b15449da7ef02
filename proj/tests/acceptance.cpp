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

// Standalone acceptance run: every criterion prints one PASS/FAIL line with
// its measured figures and wall time; the exit code is non-zero if any fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nlconv/core.hpp"
#include "nlconv/gate.hpp"
#include "nlconv/metrics.hpp"
#include "nlconv/noise.hpp"
#include "nlconv/pipeline.hpp"
#include "nlconv/tomography.hpp"

using namespace nlconv;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            detail << "[violated: " << what << "] ";
        }
    }
};

int failures = 0;

void criterion(int id, const std::string &name, double time_limit_s, const std::function<void(Outcome &)> &body) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception &e) {
        o.pass = false;
        o.detail << "[exception: " << e.what() << "] ";
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed >= time_limit_s) {
        o.pass = false;
        o.detail << "[runtime " << elapsed << " s exceeds " << time_limit_s << " s] ";
    }
    if (!o.pass) {
        ++failures;
    }
    std::printf("%s  criterion %d: %s  (%.2f s) %s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), elapsed,
                o.detail.str().c_str());
    std::fflush(stdout);
}

std::size_t index_of(const char *labels) {
    std::size_t k = 0;
    for (const char *c = labels; *c; ++c) {
        k = 2 * k + (*c == 'V' ? 1 : 0);
    }
    return k;
}

// Expected amplitudes of G on qubits 2,3 of the linear cluster, written out
// from the trigonometric coefficients without using the library's helpers.
ComplexVector expected_cluster_output(double t1, double t2) {
    double a1 = std::pow(std::cos(2 * t1), 2), b1 = std::pow(std::sin(2 * t1), 2);
    double a2 = std::pow(std::cos(2 * t2), 2), b2 = std::pow(std::sin(2 * t2), 2);
    double mu1 = std::cos(2 * t1) * std::cos(2 * t2), mu2 = std::sin(2 * t1) * std::sin(2 * t2);
    ComplexVector v = ComplexVector::Zero(16);
    v(index_of("HHHH")) = 0.5 * (a1 - b1);
    v(index_of("VVVV")) = -0.5 * (a2 - b2);
    v(index_of("HHVV")) = 0.5 * mu1;
    v(index_of("VVHH")) = 0.5 * mu1;
    v(index_of("HVHV")) = -0.5 * mu2;
    v(index_of("VHVH")) = -0.5 * mu2;
    return v;
}

double expected_success(PresetName p) {
    switch (p) {
        case PresetName::ClusterIdentity:
            return 1.0;
        case PresetName::Ghz:
            return 0.5;
        case PresetName::Dicke:
            return 0.3;
        case PresetName::BellPair:
            return 0.25;
        default:
            return -1.0;
    }
}

std::string label(PresetName p, const std::string &suffix) {
    return std::string(preset_name_string(p)) + "/" + suffix;
}

}  // namespace

int main() {
    criterion(1, "conversion table success probabilities and states", 1.0, [](Outcome &o) {
        double worst_p = 0.0, worst_f = 1.0;
        int rows = 0;
        for (const ConversionRow &row : conversion_table_rows()) {
            GateOutput out = convert_cluster(row.settings);
            double target = expected_success(row.preset);
            worst_p = std::max({worst_p, std::abs(out.success_probability - target),
                                std::abs(row.expected_success.value() - target)});
            PureState corrected = apply_local_correction(out.state, row.correction);
            double f = state_overlap(corrected, conversion_reference_state(row.preset));
            if (row.canonical) {
                ComplexVector closed = expected_cluster_output(row.settings.theta1(), row.settings.theta2());
                f = std::min(f, state_overlap(out.state, PureState(closed / closed.norm())));
            }
            worst_f = std::min(worst_f, f);
            ++rows;
        }
        o.detail << "rows " << rows << ", max |p - p_expected| " << worst_p << ", min fidelity " << worst_f << " ";
        o.require(rows >= 4, "all table rows present");
        o.require(worst_p <= 1e-12, "success probabilities within 1e-12");
        o.require(worst_f >= 1.0 - 1e-10, "state fidelity >= 1 - 1e-10");
    });

    criterion(2, "gate on the cluster reproduces the coefficient formula on a 20x20 grid", 5.0, [](Outcome &o) {
        const std::array<int, 2> targets{1, 2};
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            for (int j = 0; j < 20; ++j) {
                double t1 = kPi * i / 20.0, t2 = kPi * j / 20.0;
                ComplexVector got =
                    apply_operator(cluster_state_c4().amplitudes(), build_gate(GateSettings(t1, t2)), targets);
                worst = std::max(worst, (got - expected_cluster_output(t1, t2)).cwiseAbs().maxCoeff());
            }
        }
        o.detail << "max amplitude deviation " << worst << " ";
        o.require(worst <= 1e-12, "coefficients within 1e-12");
    });

    criterion(3, "process tomography round trip at 1e6 counts", 120.0, [](Outcome &o) {
        std::uint64_t seed = 1001;
        for (PresetName p : conversion_presets()) {
            ChoiProcess th = ideal_choi(preset(p).settings);
            auto r = mle_process_matrix(simulate_counts(th, 1e6, seed++));
            double f = process_fidelity(r.estimate, th), pur = purity(r.estimate);
            bool monotone = true;
            for (std::size_t k = 1; k < r.log_likelihood.size(); ++k) {
                monotone = monotone && r.log_likelihood[k] >= r.log_likelihood[k - 1];
            }
            o.detail << preset_name_string(p) << ": F " << f << " purity " << pur << " iterations "
                     << r.iterations << "; ";
            o.require(f >= 0.999, std::string(preset_name_string(p)) + " fidelity >= 0.999");
            o.require(pur >= 0.999, std::string(preset_name_string(p)) + " purity >= 0.999");
            o.require(monotone, std::string(preset_name_string(p)) + " log-likelihood non-decreasing");
        }
    });

    criterion(4, "phase optimization recovers 20 random mode-phase sets", 60.0, [](Outcome &o) {
        std::mt19937_64 rng(2024);
        std::uniform_real_distribution<double> angle(-kPi, kPi);
        std::vector<PresetName> presets = conversion_presets();
        double worst = 1.0;
        bool ordered = true;
        PhaseOptimizationOptions opt;
        opt.execution = Execution::Parallel;
        for (int k = 0; k < 20; ++k) {
            ChoiProcess th = ideal_choi(preset(presets[k % presets.size()]).settings);
            PhaseCorrection phases({angle(rng), angle(rng), angle(rng), angle(rng)});
            PhaseOptimizationResult r = phase_optimized_fidelity(apply_mode_phases(th, phases), th, opt);
            worst = std::min(worst, r.fidelity);
            ordered = ordered && r.fidelity >= r.raw_fidelity;
        }
        o.detail << "min recovered fidelity " << std::setprecision(10) << worst << " ";
        o.require(worst >= 0.999999, "recovered fidelity >= 0.999999");
        o.require(ordered, "optimized >= raw");
    });

    criterion(5, "entangler maps |--> to a maximally entangled state", 1.0, [](Outcome &o) {
        GateOutput out = apply_gate(preset(PresetName::Entangler).settings, PureState::product("--"));
        double c = concurrence(DensityMatrix::from_pure(out.state));
        o.detail << "concurrence " << std::setprecision(15) << c << ", success " << out.success_probability << " ";
        o.require(std::abs(c - 1.0) <= 1e-10, "concurrence 1 within 1e-10");
        o.require(std::abs(out.success_probability - 0.5) <= 1e-12, "success 1/2 within 1e-12");
    });

    criterion(6, "discord demonstration without entanglement", 10.0, [](Outcome &o) {
        ComplexMatrix plus = PureState::product("+").projector();
        DensityMatrix in(tensor_product(ComplexMatrix(ComplexMatrix::Identity(2, 2) / 2.0), plus));
        ChannelOutput out = apply_choi_channel(in, ideal_choi(preset(PresetName::DiscordDemo).settings));
        double ln = log_negativity(out.state), c = concurrence(out.state);
        double d1 = discord(out.state, 0), d2 = discord(out.state, 1);
        o.detail << std::setprecision(10) << "LN " << ln << " C " << c << " D(q1) " << d1 << " D(q2) " << d2
                 << " p " << out.probability << " ";
        o.require(std::abs(ln) <= 1e-10, "log-negativity 0 within 1e-10");
        o.require(std::abs(c) <= 1e-10, "concurrence 0 within 1e-10");
        o.require(std::abs(d1) <= 1e-6, "discord on qubit 1 zero within 1e-6");
        o.require(d2 > 0.01, "discord on qubit 2 > 0.01");
        o.require(std::abs(out.probability - 7.0 / 16.0) <= 1e-12, "success 7/16 within 1e-12");
    });

    criterion(7, "noise calibration and simulated tomography at 1e5 counts", 600.0, [](Outcome &o) {
        ExperimentConfig c;
        c.calibrate_noise = true;
        c.mean_counts = 1e5;
        c.monte_carlo_samples = 100;
        c.seed = 7;
        TableReport r = run_tomography_suite(c);
        for (PresetName p : conversion_presets()) {
            double target = reference_process_figures(p).raw_fidelity;
            double calibrated = r.value(label(p, "channel-fidelity-raw"));
            const ReportRow &row = r.row(label(p, "fidelity-raw"));
            o.detail << preset_name_string(p) << ": target " << target << " calibrated " << calibrated
                     << " reconstructed " << row.value << " +- " << row.std.value_or(-1.0) << "; ";
            o.require(std::abs(calibrated - target) <= 1e-4, std::string(preset_name_string(p)) + " calibration");
            o.require(std::abs(row.value - target) <= 0.02, std::string(preset_name_string(p)) + " reconstruction");
            o.require(row.std.has_value() && *row.std > 0.0 && row.n_samples == 100,
                      std::string(preset_name_string(p)) + " std from 100 resamples");
        }
    });

    criterion(8, "operation and total fidelities with a realistic cluster", 120.0, [](Outcome &o) {
        ExperimentConfig c;
        c.calibrate_noise = true;
        TableReport r = run_table3(c);
        double identity_total = r.value(label(PresetName::ClusterIdentity, "total-fidelity-ideal-channel"));
        for (PresetName p : conversion_presets()) {
            double op = r.value(label(p, "operation-fidelity")), total = r.value(label(p, "total-fidelity"));
            o.detail << preset_name_string(p) << ": operation " << op << " total " << total << "; ";
            o.require(op >= total, std::string(preset_name_string(p)) + " operation >= total");
            o.require(total >= 0.80 && total <= 0.95, std::string(preset_name_string(p)) + " total in [0.80, 0.95]");
        }
        o.detail << "identity total " << std::setprecision(12) << identity_total << " ";
        o.require(std::abs(identity_total - 0.915) <= 1e-6, "identity total 0.915 within 1e-6");
    });

    criterion(9, "bootstrap std scales as 1/sqrt(counts)", 300.0, [](Outcome &o) {
        ExperimentConfig c;
        c.calibrate_noise = true;
        ChoiProcess th = ideal_choi(preset(PresetName::Ghz).settings);
        ChoiProcess noisy = apply_noise(th, channel_noise(c, PresetName::Ghz)->noise);
        MetricSpec spec{MetricName::ProcessFidelity, th};
        MonteCarloOptions opt;
        opt.samples = 200;
        opt.execution = Execution::Parallel;
        std::vector<MetricSpec> specs{spec};
        opt.seed = 91;
        double s3 = monte_carlo_metrics(simulate_counts(noisy, 1e3, 90), specs, opt)[0].std;
        opt.seed = 93;
        double s4 = monte_carlo_metrics(simulate_counts(noisy, 1e4, 92), specs, opt)[0].std;
        double ratio = s3 / s4;
        o.detail << "std(1e3) " << s3 << " std(1e4) " << s4 << " ratio " << ratio << " (sqrt 10 = "
                 << std::sqrt(10.0) << ") ";
        o.require(std::abs(ratio / std::sqrt(10.0) - 1.0) <= 0.3, "ratio within 30% of sqrt(10)");
    });

    std::printf("%s: %d of 9 criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}
