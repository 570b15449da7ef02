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

#include "nlconv/pipeline.hpp"

#include <cinttypes>
#include <cstdio>
#include <limits>
#include <sstream>

#include "nlconv/angles.hpp"
#include "nlconv/errors.hpp"
#include "nlconv/io.hpp"
#include "nlconv/metrics.hpp"
#include "nlconv/poisson.hpp"

namespace nlconv {

using nlohmann::json;

ReferenceProcessFigures reference_process_figures(PresetName preset) {
    switch (preset) {
        case PresetName::ClusterIdentity:
            return {0.949, 0.947, 0.973};
        case PresetName::Ghz:
            return {0.913, 0.875, 0.952};
        case PresetName::Dicke:
            return {0.917, 0.925, 0.948};
        case PresetName::BellPair:
            return {0.920, 0.947, 0.953};
        default:
            throw InvalidArgument("no reference process figures for preset " +
                                  std::string(preset_name_string(preset)));
    }
}

// Chosen so every calibrated channel keeps a visible raw/optimized gap
// except where the gate is blind to input phases (bell-pair).
NoiseSpec default_channel_noise_template() {
    NoiseSpec n;
    n.depolarizing_p = 0.04;
    n.dephasing_p = 0.01;
    n.mode_phases = PhaseCorrection({0.3, 0.3, 0.0, 0.0});
    return n;
}

NoiseSpec default_cluster_noise_template() {
    NoiseSpec n;
    n.depolarizing_p = 0.02;
    n.dephasing_p = 0.05;
    return n;
}

json ExperimentConfig::to_json() const {
    json p = json::array();
    for (PresetName name : presets) {
        p.push_back(std::string(preset_name_string(name)));
    }
    json j = {{"presets", p},
              {"mean_counts", mean_counts},
              {"seed", seed},
              {"calibrate_noise", calibrate_noise},
              {"noise_template", io::noise_to_json(noise_template)},
              {"monte_carlo_samples", monte_carlo_samples},
              {"mle", {{"tolerance", mle.tolerance}, {"max_iterations", mle.max_iterations}}},
              {"realistic_cluster_fidelity", realistic_cluster_fidelity},
              {"cluster_noise_template", io::noise_to_json(cluster_noise_template)},
              {"entangler_target_fidelity", entangler_target_fidelity},
              {"table3_sampled", table3_sampled}};
    // Execution mode is deliberately absent: it never changes the numbers.
    j["settings"] = settings ? json{{"theta1", settings->theta1()}, {"theta2", settings->theta2()}} : json(nullptr);
    j["noise"] = noise ? io::noise_to_json(*noise) : json(nullptr);
    return j;
}

const ReportRow &TableReport::row(const std::string &label) const {
    for (const ReportRow &r : rows) {
        if (r.label == label) {
            return r;
        }
    }
    throw InvalidArgument("report " + name + " has no row " + label);
}

json TableReport::to_json() const {
    json r = json::array();
    for (const ReportRow &row : rows) {
        r.push_back({{"label", row.label},
                     {"value", row.value},
                     {"std", row.std ? json(*row.std) : json(nullptr)},
                     {"n_samples", row.n_samples},
                     {"seed", row.seed ? json(*row.seed) : json(nullptr)}});
    }
    return {{"name", name}, {"rows", r}, {"metadata", metadata}};
}

std::string TableReport::to_csv() const {
    std::ostringstream out;
    out << "label,value,std,n_samples,seed\n";
    char buf[64];
    for (const ReportRow &row : rows) {
        out << row.label << ',';
        std::snprintf(buf, sizeof buf, "%.17g", row.value);
        out << buf << ',';
        if (row.std) {
            std::snprintf(buf, sizeof buf, "%.17g", *row.std);
            out << buf;
        }
        out << ',' << row.n_samples << ',';
        if (row.seed) {
            out << *row.seed;
        }
        out << '\n';
    }
    return out.str();
}

std::string config_hash(const json &config) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : config.dump()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

namespace {

void validate_config(const ExperimentConfig &c) {
    if (c.presets.empty() && !c.settings) {
        throw InvalidArgument("config: no presets");
    }
    if (!(c.mean_counts > 0.0)) {
        throw InvalidArgument("config: mean_counts must be positive");
    }
    if (c.monte_carlo_samples < 2) {
        throw InvalidArgument("config: monte_carlo_samples must be at least 2");
    }
    if (c.noise) {
        c.noise->validate();
    }
    c.noise_template.validate();
    c.cluster_noise_template.validate();
}

json report_metadata(const std::string &report, const std::optional<json> &config) {
    json m = {{"tool", "nlconv"}, {"version", io::tool_version()}, {"report", report},
              {"generator", std::string(PoissonSampler::kDescription)}};
    if (config) {
        m["config"] = *config;
        m["config_hash"] = config_hash(*config);
    } else {
        m["config"] = nullptr;
    }
    return m;
}

struct Run {
    std::string label;
    PresetName preset;
    GateSettings settings;
};

std::vector<Run> runs_of(const ExperimentConfig &c) {
    std::vector<Run> runs;
    if (c.settings) {
        PresetName ref = c.presets.empty() ? PresetName::ClusterIdentity : c.presets.front();
        runs.push_back({"custom", ref, *c.settings});
        return runs;
    }
    for (PresetName p : c.presets) {
        runs.push_back({std::string(preset_name_string(p)), p, preset(p).settings});
    }
    return runs;
}

void add(TableReport &r, std::string label, double value) { r.rows.push_back({std::move(label), value, {}, 0, {}}); }

void add_sampled(TableReport &r, std::string label, double value, std::span<const double> samples,
                 std::uint64_t seed) {
    SampleStats st = sample_stats(samples);
    r.rows.push_back({std::move(label), value, st.std, static_cast<int>(samples.size()), seed});
}

std::vector<double> column(const std::vector<std::vector<double>> &rows, std::size_t k) {
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto &row : rows) {
        out.push_back(row[k]);
    }
    return out;
}

// Point estimates and every bootstrap sample go through the same evaluator so
// the reported value and its std describe the same quantity.
void add_sampled_block(TableReport &r, const std::string &prefix, const std::vector<std::string> &names,
                       const std::vector<double> &point, const std::vector<std::vector<double>> &samples,
                       std::uint64_t seed) {
    for (std::size_t k = 0; k < names.size(); ++k) {
        add_sampled(r, prefix + "/" + names[k], point[k], column(samples, k), seed);
    }
}

ChoiProcess noisy_channel(const ChoiProcess &th, const std::optional<CalibrationResult> &cal) {
    return cal ? apply_noise(th, cal->noise) : th;
}

std::optional<TargetKind> preset_target(PresetName p) {
    switch (p) {
        case PresetName::ClusterIdentity:
            return TargetKind::Cluster;
        case PresetName::Ghz:
            return TargetKind::Ghz4;
        case PresetName::Dicke:
            return TargetKind::Dicke4_2;
        case PresetName::BellPair:
            return TargetKind::BellPairProduct;
        default:
            return std::nullopt;
    }
}

}  // namespace

std::optional<CalibrationResult> channel_noise(const ExperimentConfig &config, PresetName preset_name) {
    if (config.calibrate_noise) {
        ChoiProcess th = ideal_choi(preset(preset_name).settings);
        return calibrate_noise_to_fidelity(reference_process_figures(preset_name).raw_fidelity, th,
                                           config.noise_template);
    }
    if (config.noise) {
        return CalibrationResult{*config.noise, 1.0, std::numeric_limits<double>::quiet_NaN()};
    }
    return std::nullopt;
}

CalibrationResult realistic_cluster_noise(const ExperimentConfig &config) {
    return calibrate_state_noise_to_fidelity(config.realistic_cluster_fidelity,
                                             DensityMatrix::from_pure(cluster_state_c4()),
                                             config.cluster_noise_template);
}

TableReport run_table1() {
    TableReport r{"table1", {}, report_metadata("table1", std::nullopt)};
    json rows = json::array();
    int index = 0;
    for (const ConversionRow &row : conversion_table_rows()) {
        std::string name(preset_name_string(row.preset));
        std::string prefix = name + "/row" + std::to_string(index++);
        GateOutput out = convert_cluster(row.settings);
        PureState corrected = apply_local_correction(out.state, row.correction);
        add(r, prefix + "/success-probability", out.success_probability);
        add(r, prefix + "/expected-success-probability", row.expected_success.value());
        add(r, prefix + "/reference-fidelity", state_overlap(corrected, conversion_reference_state(row.preset)));
        if (row.canonical) {
            if (auto target = preset_target(row.preset)) {
                add(r, name + "/target-fidelity", state_overlap(corrected, target_state(*target)));
            }
        }
        rows.push_back({{"label", prefix},
                        {"preset", name},
                        {"theta1", format_angle(row.settings.theta1())},
                        {"theta2", format_angle(row.settings.theta2())},
                        {"canonical", row.canonical},
                        {"local_correction", row.correction == LocalCorrection::None ? "none" : "phase-on-every-qubit"}});
    }
    r.metadata["rows"] = rows;
    return r;
}

TableReport run_tomography_suite(const ExperimentConfig &config) {
    validate_config(config);
    json cfg = config.to_json();
    TableReport r{"table2-sim", {}, report_metadata("table2-sim", cfg)};
    json refs = json::object();
    PhaseOptimizationOptions serial_opt;
    serial_opt.execution = Execution::Serial;
    PhaseOptimizationOptions point_opt;
    point_opt.execution = config.execution;

    for (const Run &run : runs_of(config)) {
        ChoiProcess th = ideal_choi(run.settings);
        std::optional<CalibrationResult> cal = channel_noise(config, run.preset);
        ChoiProcess channel = noisy_channel(th, cal);
        if (cal && config.calibrate_noise) {
            add(r, run.label + "/noise-magnitude", cal->magnitude);
        }
        add(r, run.label + "/channel-purity", purity(channel));
        add(r, run.label + "/channel-fidelity-raw", process_fidelity(channel, th));

        std::uint64_t run_seed = derive_seed(config.seed, "tomography/" + run.label);
        std::uint64_t mc_seed = derive_seed(run_seed, "monte-carlo");
        CoincidenceDataset data = simulate_counts(channel, config.mean_counts, derive_seed(run_seed, "counts"));

        auto evaluate = [&](const ChoiProcess &chi, const PhaseOptimizationOptions &opt) {
            return std::vector<double>{purity(chi), process_fidelity(chi, th),
                                       phase_optimized_fidelity(chi, th, opt).fidelity, chi.success_scale()};
        };
        auto report = mle_process_matrix(data, config.mle);
        std::vector<double> point = evaluate(report.estimate, point_opt);
        auto samples = bootstrap_samples(data, config.monte_carlo_samples, mc_seed, config.execution,
                                         [&](const CoincidenceDataset &d) {
                                             return evaluate(mle_process_matrix(d, config.mle).estimate, serial_opt);
                                         });
        add_sampled_block(r, run.label, {"purity", "fidelity-raw", "fidelity-optimized", "success-scale"}, point,
                          samples, mc_seed);
        add(r, run.label + "/mle-iterations", report.iterations);
        add(r, run.label + "/mle-converged", report.converged ? 1.0 : 0.0);
        if (run.label != "custom") {
            ReferenceProcessFigures ref = reference_process_figures(run.preset);
            refs[run.label] = {{"purity", ref.purity},
                               {"fidelity-raw", ref.raw_fidelity},
                               {"fidelity-optimized", ref.optimized_fidelity}};
        }
    }
    r.metadata["reference"] = refs;
    return r;
}

TableReport run_entangler_demo(const ExperimentConfig &config) {
    validate_config(config);
    json cfg = config.to_json();
    TableReport r{"entangler", {}, report_metadata("entangler", cfg)};
    GateSettings s = preset(PresetName::Entangler).settings;
    ChoiProcess th = ideal_choi(s);
    PureState input = PureState::product("--");
    DensityMatrix rho_in = DensityMatrix::from_pure(input);

    GateOutput ideal = apply_gate(s, input);
    DensityMatrix ideal_rho = DensityMatrix::from_pure(ideal.state);
    add(r, "entangler/success-probability-ideal", ideal.success_probability);
    add(r, "entangler/concurrence-ideal", concurrence(ideal_rho));
    add(r, "entangler/psi-plus-fidelity-ideal", state_overlap(ideal.state, target_state(TargetKind::PsiPlus)));

    std::optional<NoiseSpec> noise = config.noise;
    if (config.calibrate_noise) {
        CalibrationResult cal = calibrate_magnitude(
            config.entangler_target_fidelity, config.noise_template, [&](const NoiseSpec &n) {
                return fidelity(apply_choi_channel(rho_in, apply_noise(th, n)).state, ideal_rho);
            });
        noise = cal.noise;
        add(r, "entangler/noise-magnitude", cal.magnitude);
    }
    ChoiProcess channel = noise ? apply_noise(th, *noise) : th;
    ChannelOutput out = apply_choi_channel(rho_in, channel);
    add(r, "entangler/state-fidelity", fidelity(out.state, ideal_rho));
    add(r, "entangler/state-success-probability", out.probability);

    std::uint64_t seed = derive_seed(config.seed, "entangler");
    std::uint64_t mc_seed = derive_seed(seed, "monte-carlo");
    PreparationSetting prep{{PrepLabel::Minus, PrepLabel::Minus}};
    CoincidenceDataset data =
        simulate_state_counts(out.state, config.mean_counts, derive_seed(seed, "counts"), out.probability, prep);
    auto evaluate = [&](const CoincidenceDataset &d) {
        DensityMatrix est = mle_density_matrix(d, config.mle).estimate;
        return std::vector<double>{purity(est), fidelity(est, ideal_rho), concurrence(est),
                                   estimated_success_probability(d)};
    };
    std::vector<double> point = evaluate(data);
    auto samples = bootstrap_samples(data, config.monte_carlo_samples, mc_seed, config.execution, evaluate);
    add_sampled_block(r, "entangler", {"purity", "fidelity", "concurrence", "success-probability"}, point, samples,
                      mc_seed);
    return r;
}

TableReport run_discord_demo(const ExperimentConfig &config) {
    validate_config(config);
    json cfg = config.to_json();
    TableReport r{"discord", {}, report_metadata("discord", cfg)};
    GateSettings s = preset(PresetName::DiscordDemo).settings;
    ChoiProcess th = ideal_choi(s);
    DensityMatrix rho_in(tensor_product(DensityMatrix::maximally_mixed(1).matrix(),
                                        DensityMatrix::from_pure(PureState::product("+")).matrix()));

    DiscordOptions point_opt;
    point_opt.execution = config.execution;
    ChannelOutput ideal = apply_choi_channel(rho_in, th);
    add(r, "discord/success-probability-ideal", ideal.probability);
    add(r, "discord/log-negativity-ideal", log_negativity(ideal.state));
    add(r, "discord/concurrence-ideal", concurrence(ideal.state));
    add(r, "discord/discord-q1-ideal", discord(ideal.state, 0, point_opt));
    add(r, "discord/discord-q2-ideal", discord(ideal.state, 1, point_opt));

    // No published figure to calibrate against; only fixed noise applies.
    ChoiProcess channel = config.noise ? apply_noise(th, *config.noise) : th;
    ChannelOutput out = apply_choi_channel(rho_in, channel);

    std::uint64_t seed = derive_seed(config.seed, "discord");
    std::uint64_t mc_seed = derive_seed(seed, "monte-carlo");
    CoincidenceDataset data =
        simulate_state_counts(out.state, config.mean_counts, derive_seed(seed, "counts"), out.probability);
    auto evaluate = [&](const CoincidenceDataset &d, const DiscordOptions &opt) {
        DensityMatrix est = mle_density_matrix(d, config.mle).estimate;
        return std::vector<double>{log_negativity(est), concurrence(est), discord(est, 0, opt), discord(est, 1, opt),
                                   purity(est), estimated_success_probability(d)};
    };
    std::vector<double> point = evaluate(data, point_opt);
    auto samples = bootstrap_samples(data, config.monte_carlo_samples, mc_seed, config.execution,
                                     [&](const CoincidenceDataset &d) { return evaluate(d, DiscordOptions{}); });
    add_sampled_block(r, "discord",
                      {"log-negativity", "concurrence", "discord-q1", "discord-q2", "purity", "success-probability"},
                      point, samples, mc_seed);
    return r;
}

TableReport run_table3(const ExperimentConfig &config) {
    validate_config(config);
    json cfg = config.to_json();
    TableReport r{"table3", {}, report_metadata("table3", cfg)};
    DensityMatrix ideal_cluster = DensityMatrix::from_pure(cluster_state_c4());
    CalibrationResult cluster_cal = realistic_cluster_noise(config);
    DensityMatrix realistic = apply_noise(ideal_cluster, cluster_cal.noise);
    add(r, "cluster/noise-magnitude", cluster_cal.magnitude);
    add(r, "cluster/realistic-fidelity", fidelity(realistic, ideal_cluster));
    add(r, "cluster/realistic-purity", purity(realistic));

    constexpr std::array<int, 2> targets{1, 2};
    for (const Run &run : runs_of(config)) {
        ChoiProcess th = ideal_choi(run.settings);
        std::optional<CalibrationResult> cal = channel_noise(config, run.preset);
        ChoiProcess channel = noisy_channel(th, cal);
        DensityMatrix ideal_out = embed_two_qubit_channel(ideal_cluster, th, targets).state;
        DensityMatrix ideal_on_real = embed_two_qubit_channel(realistic, th, targets).state;
        add(r, run.label + "/ideal-fidelity", fidelity(ideal_out, ideal_out));
        add(r, run.label + "/total-fidelity-ideal-channel", fidelity(ideal_on_real, ideal_out));

        auto evaluate = [&](const ChoiProcess &chi) {
            ChannelOutput out = embed_two_qubit_channel(realistic, chi, targets);
            return std::vector<double>{fidelity(out.state, ideal_on_real), fidelity(out.state, ideal_out),
                                       out.probability};
        };
        const std::vector<std::string> names{"operation-fidelity", "total-fidelity", "success-probability"};
        if (!config.table3_sampled) {
            std::vector<double> v = evaluate(channel);
            for (std::size_t k = 0; k < names.size(); ++k) {
                add(r, run.label + "/" + names[k], v[k]);
            }
            continue;
        }
        std::uint64_t run_seed = derive_seed(config.seed, "table3/" + run.label);
        std::uint64_t mc_seed = derive_seed(run_seed, "monte-carlo");
        CoincidenceDataset data = simulate_counts(channel, config.mean_counts, derive_seed(run_seed, "counts"));
        std::vector<double> point = evaluate(mle_process_matrix(data, config.mle).estimate);
        auto samples = bootstrap_samples(data, config.monte_carlo_samples, mc_seed, config.execution,
                                         [&](const CoincidenceDataset &d) {
                                             return evaluate(mle_process_matrix(d, config.mle).estimate);
                                         });
        add_sampled_block(r, run.label, names, point, samples, mc_seed);
    }
    return r;
}

}  // namespace nlconv
