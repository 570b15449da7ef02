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

#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nlconv/angles.hpp"
#include "nlconv/core.hpp"
#include "nlconv/errors.hpp"
#include "nlconv/gate.hpp"
#include "nlconv/io.hpp"
#include "nlconv/metrics.hpp"
#include "nlconv/noise.hpp"
#include "nlconv/pipeline.hpp"
#include "nlconv/poisson.hpp"
#include "nlconv/tomography.hpp"

namespace nlconv::cli {

namespace {

using nlohmann::json;

struct GateArgs {
    std::string preset;
    std::string theta1;
    std::string theta2;

    void attach(CLI::App *app) {
        app->add_option("--preset", preset, "named angle preset");
        app->add_option("--theta1", theta1, "first angle: radians or Npi/M");
        app->add_option("--theta2", theta2, "second angle: radians or Npi/M");
    }
    bool given() const { return !preset.empty() || !theta1.empty() || !theta2.empty(); }

    GateSettings settings() const {
        if (!preset.empty()) {
            if (!theta1.empty() || !theta2.empty()) {
                throw InvalidArgument("give either --preset or --theta1/--theta2, not both");
            }
            return nlconv::preset(preset).settings;
        }
        if (theta1.empty() || theta2.empty()) {
            throw InvalidArgument("both --theta1 and --theta2 are required without --preset");
        }
        return GateSettings(parse_angle(theta1), parse_angle(theta2));
    }

    json to_json() const {
        GateSettings s = settings();
        json j = {{"theta1", format_angle(s.theta1())}, {"theta2", format_angle(s.theta2())}};
        if (!preset.empty()) {
            j["preset"] = preset;
        }
        return j;
    }
};

// Sampling commands take --seed or draw one here and announce it, so every
// run can be repeated exactly.
std::uint64_t resolve_seed(const std::optional<std::uint64_t> &seed, std::ostream &out) {
    if (seed) {
        return *seed;
    }
    std::random_device rd;
    std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    out << "seed: " << s << " (generated)\n";
    return s;
}

std::string joined(const std::vector<std::string> &args) {
    std::string s = "nlconv";
    for (const auto &a : args) {
        s += ' ';
        s += a;
    }
    return s;
}

std::string fmt(double v) {
    std::ostringstream o;
    o << std::setprecision(10) << v;
    return o.str();
}

// Accepts a bare estimate or a reconstruction output wrapping one.
json unwrap_estimate(const json &j) {
    if (j.contains("report")) {
        return j.at("report").at("estimate");
    }
    if (j.contains("estimate")) {
        return j.at("estimate");
    }
    return j;
}

Estimate load_estimate(const std::string &path) {
    json j = unwrap_estimate(io::read_json_file(path));
    if (j.value("kind", std::string()) == "choi") {
        return io::choi_from_json(j);
    }
    return io::density_from_json(j);
}

std::vector<int> parse_targets(const std::string &text, int qubits) {
    std::vector<int> t;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) {
                throw InvalidArgument("bad target list: " + text);
            }
            t.push_back(v - 1);  // 1-based on the command line
        } catch (const std::logic_error &) {
            throw InvalidArgument("bad target list: " + text);
        }
    }
    if (t.size() != 2 || t[0] == t[1] || std::min(t[0], t[1]) < 0 || std::max(t[0], t[1]) >= qubits) {
        throw InvalidArgument("--targets needs two distinct qubits in 1.." + std::to_string(qubits));
    }
    return t;
}

// ---------------------------------------------------------------- gate
int cmd_gate(const GateArgs &g, const std::string &out_path, const std::vector<std::string> &args, std::ostream &out) {
    GateSettings s = g.settings();
    ComplexMatrix m = build_gate(s);
    GateCoefficients c = gate_coefficients(s);
    double norm = Eigen::JacobiSVD<ComplexMatrix>(m).singularValues()(0);
    out << "theta1 " << format_angle(s.theta1()) << "  theta2 " << format_angle(s.theta2()) << "\n"
        << "alpha1 " << fmt(c.alpha1) << "  beta1 " << fmt(c.beta1) << "  alpha2 " << fmt(c.alpha2) << "  beta2 "
        << fmt(c.beta2) << "  mu1 " << fmt(c.mu1) << "  mu2 " << fmt(c.mu2) << "\n"
        << "operator norm " << fmt(norm) << "\n";
    if (!out_path.empty()) {
        json j = {{"metadata", io::metadata(joined(args), g.to_json())},
                  {"settings", g.to_json()},
                  {"coefficients",
                   {{"alpha1", c.alpha1}, {"beta1", c.beta1}, {"alpha2", c.alpha2}, {"beta2", c.beta2},
                    {"mu1", c.mu1}, {"mu2", c.mu2}}},
                  {"operator_norm", norm},
                  {"matrix", io::matrix_to_json(m)}};
        io::write_json_file(out_path, j);
    }
    return kOk;
}

// ---------------------------------------------------------------- convert
int cmd_convert(const GateArgs &g, const std::string &state_in, const std::string &targets_text,
                const std::string &out_path, const std::vector<std::string> &args, std::ostream &out) {
    GateSettings s = g.settings();
    json state_json;
    double probability = 0.0;
    auto input = state_in.empty() ? std::variant<PureState, DensityMatrix>(cluster_state_c4())
                                  : io::state_from_json(io::read_json_file(state_in));
    int qubits = std::visit([](const auto &st) { return st.qubits(); }, input);
    if (qubits < 2) {
        throw InvalidArgument("convert: input needs at least two qubits");
    }
    std::string tt = targets_text.empty() ? (qubits >= 3 ? "2,3" : "1,2") : targets_text;
    std::vector<int> targets = parse_targets(tt, qubits);

    if (auto *pure = std::get_if<PureState>(&input)) {
        if (!pure->normalized()) {
            throw InvalidArgument("convert: input state is not normalized");
        }
        NormalizedState n = normalize_state(PureState(apply_operator(pure->amplitudes(), build_gate(s), targets)));
        probability = n.norm_squared;
        state_json = io::state_to_json(n.state);
    } else {
        ChannelOutput o =
            embed_two_qubit_channel(std::get<DensityMatrix>(input), ideal_choi(s), {targets[0], targets[1]});
        probability = o.probability;
        state_json = io::state_to_json(o.state);
    }
    out << "success probability " << fmt(probability) << "\n";
    if (!out_path.empty()) {
        json config = g.to_json();
        config["state_in"] = state_in.empty() ? json("cluster") : json(state_in);
        config["targets"] = tt;
        json j = state_json;
        j["success_probability"] = probability;
        j["metadata"] = io::metadata(joined(args), config);
        io::write_json_file(out_path, j);
    }
    return kOk;
}

// ---------------------------------------------------------------- tomo
struct SimulateArgs {
    GateArgs gate;
    std::string chi_path;
    std::string state_path;
    std::string noise_path;
    std::string prep;
    double success = 1.0;
    double mean_counts = 0.0;
    std::optional<std::uint64_t> seed;
    std::string out_path;
};

int cmd_tomo_simulate(const SimulateArgs &a, const std::vector<std::string> &args, std::ostream &out) {
    int sources = (a.gate.given() ? 1 : 0) + (a.chi_path.empty() ? 0 : 1) + (a.state_path.empty() ? 0 : 1);
    if (sources != 1) {
        throw InvalidArgument("tomo simulate: give exactly one of --preset/--theta1/--theta2, --chi, --state");
    }
    if (!(a.mean_counts > 0.0)) {
        throw InvalidArgument("tomo simulate: --mean-counts must be positive");
    }
    std::optional<NoiseSpec> noise;
    if (!a.noise_path.empty()) {
        noise = io::noise_from_json(io::read_json_file(a.noise_path));
    }
    std::uint64_t seed = resolve_seed(a.seed, out);
    json config = {{"mean_counts", a.mean_counts}, {"seed", seed}};
    CoincidenceDataset data;
    if (!a.state_path.empty()) {
        DensityMatrix rho = io::density_from_json(io::read_json_file(a.state_path));
        if (rho.qubits() != 2) {
            throw InvalidArgument("tomo simulate: state tomography needs a two-qubit state");
        }
        if (noise) {
            rho = apply_noise(rho, *noise);
        }
        std::optional<PreparationSetting> prep;
        if (!a.prep.empty()) {
            if (a.prep.size() != 2) {
                throw InvalidArgument("--prep needs two labels, e.g. HV or +-");
            }
            prep = PreparationSetting{{parse_prep_label(a.prep.substr(0, 1)), parse_prep_label(a.prep.substr(1, 1))}};
        }
        data = simulate_state_counts(rho, a.mean_counts, seed, a.success, prep);
        config["state"] = a.state_path;
    } else {
        ChoiProcess chi = a.chi_path.empty() ? ideal_choi(a.gate.settings())
                                             : io::choi_from_json(unwrap_estimate(io::read_json_file(a.chi_path)));
        if (noise) {
            chi = apply_noise(chi, *noise);
        }
        data = simulate_counts(chi, a.mean_counts, seed);
        config["channel"] = a.chi_path.empty() ? a.gate.to_json() : json(a.chi_path);
    }
    if (noise) {
        config["noise"] = io::noise_to_json(*noise);
    }
    json j = io::dataset_to_json(data);
    j["metadata"] = io::metadata(joined(args), config);
    io::write_json_file(a.out_path, j);
    out << "records " << data.records.size() << "  total counts " << data.total_counts() << "\n";
    return kOk;
}

int cmd_tomo_reconstruct(const std::string &data_path, const std::string &type, const MleOptions &mle,
                         const std::string &out_path, const std::vector<std::string> &args, std::ostream &out) {
    CoincidenceDataset data = io::dataset_from_json(io::read_json_file(data_path));
    DatasetKind kind = validate_dataset(data);
    json report;
    if (type == "state") {
        if (kind != DatasetKind::State) {
            throw InvalidArgument("tomo reconstruct: dataset is not a state-tomography dataset");
        }
        auto r = mle_density_matrix(data, mle);
        report = io::report_to_json(r);
        report["success_probability"] = estimated_success_probability(data);
    } else if (type == "process") {
        if (kind != DatasetKind::Process) {
            throw InvalidArgument("tomo reconstruct: dataset is not a process-tomography dataset");
        }
        report = io::report_to_json(mle_process_matrix(data, mle));
    } else {
        throw InvalidArgument("--type must be state or process");
    }
    json config = {{"data", data_path},
                   {"type", type},
                   {"tolerance", mle.tolerance},
                   {"max_iterations", mle.max_iterations}};
    io::write_json_file(out_path, {{"metadata", io::metadata(joined(args), config)}, {"report", report}});
    out << "iterations " << report["iterations"].get<int>() << "  converged "
        << (report["converged"].get<bool>() ? "true" : "false") << "  log-likelihood "
        << fmt(report["final_log_likelihood"].get<double>()) << "\n";
    return kOk;
}

// ---------------------------------------------------------------- metrics
struct MetricsArgs {
    std::string chi_path;
    std::string state_path;
    std::string target_path;
    std::string target_preset;
    std::string target_kind;
    std::vector<std::string> metrics;
    bool optimize_phases = false;
    int monte_carlo = 0;
    std::string data_path;
    std::optional<std::uint64_t> seed;
    std::string out_path;
};

int cmd_metrics(const MetricsArgs &a, const std::vector<std::string> &args, std::ostream &out) {
    if (a.chi_path.empty() == a.state_path.empty()) {
        throw InvalidArgument("metrics: give exactly one of --chi, --state");
    }
    Estimate estimate = load_estimate(a.chi_path.empty() ? a.state_path : a.chi_path);
    bool is_process = std::holds_alternative<ChoiProcess>(estimate);
    if (is_process != !a.chi_path.empty()) {
        throw InvalidArgument("metrics: file kind does not match --chi/--state");
    }

    MetricTarget target;
    int target_sources = (a.target_path.empty() ? 0 : 1) + (a.target_preset.empty() ? 0 : 1) +
                         (a.target_kind.empty() ? 0 : 1);
    if (target_sources > 1) {
        throw InvalidArgument("metrics: give at most one of --target, --target-preset, --target-kind");
    }
    if (!a.target_path.empty()) {
        Estimate t = load_estimate(a.target_path);
        std::visit([&](auto &&v) { target = v; }, t);
    } else if (!a.target_preset.empty()) {
        if (!is_process) {
            throw InvalidArgument("metrics: --target-preset needs --chi");
        }
        target = ideal_choi(preset(a.target_preset).settings);
    } else if (!a.target_kind.empty()) {
        target = DensityMatrix::from_pure(target_state(parse_target_kind(a.target_kind)));
    }
    bool has_target = !std::holds_alternative<std::monostate>(target);

    std::vector<std::string> names = a.metrics;
    if (names.empty()) {
        names.push_back("purity");
        if (has_target) {
            names.push_back(is_process ? "process-fidelity" : "fidelity");
        }
    }
    if (a.optimize_phases) {
        names.push_back("process-fidelity-optimized");
    }
    std::vector<MetricSpec> specs;
    for (const std::string &n : names) {
        MetricName name = parse_metric_name(n);
        if (std::find_if(specs.begin(), specs.end(), [&](const MetricSpec &s) { return s.name == name; }) ==
            specs.end()) {
            specs.push_back({name, target});
        }
    }

    std::vector<MetricReport> reports;
    for (const MetricSpec &spec : specs) {
        MetricReport rep{std::string(metric_name_string(spec.name)), 0.0, std::nullopt, {}};
        if (spec.name == MetricName::ProcessFidelityOptimized) {
            if (!is_process || !std::holds_alternative<ChoiProcess>(target)) {
                throw InvalidArgument("metrics: phase optimization needs --chi and a process target");
            }
            PhaseOptimizationOptions opt;
            opt.execution = Execution::Parallel;
            PhaseOptimizationResult r =
                phase_optimized_fidelity(std::get<ChoiProcess>(estimate), std::get<ChoiProcess>(target), opt);
            rep.value = r.fidelity;
            rep.metadata = {{"raw_fidelity", r.raw_fidelity}, {"phase1", r.phases[0]}, {"phase2", r.phases[1]},
                            {"phase3", r.phases[2]}, {"phase4", r.phases[3]}};
        } else {
            rep.value = evaluate_metric(spec, estimate);
        }
        reports.push_back(std::move(rep));
    }

    json config = {{"estimate", a.chi_path.empty() ? a.state_path : a.chi_path}, {"metrics", names}};
    if (a.monte_carlo > 0) {
        if (a.data_path.empty()) {
            throw InvalidArgument("metrics: --monte-carlo needs --data with the counts behind the estimate");
        }
        CoincidenceDataset data = io::dataset_from_json(io::read_json_file(a.data_path));
        bool data_is_process = validate_dataset(data) == DatasetKind::Process;
        if (data_is_process != is_process) {
            throw InvalidArgument("metrics: --data kind does not match the estimate");
        }
        MonteCarloOptions opt;
        opt.samples = a.monte_carlo;
        opt.seed = resolve_seed(a.seed, out);
        opt.execution = Execution::Parallel;
        auto summary = monte_carlo_metrics(data, specs, opt);
        for (std::size_t k = 0; k < summary.size(); ++k) {
            reports[k].std = summary[k].std;
            reports[k].metadata.emplace_back("monte_carlo_mean", summary[k].mean);
        }
        config["monte_carlo"] = a.monte_carlo;
        config["data"] = a.data_path;
        config["seed"] = opt.seed;
    }

    json list = json::array();
    for (const MetricReport &r : reports) {
        out << r.name << " " << fmt(r.value);
        if (r.std) {
            out << " +- " << fmt(*r.std);
        }
        out << "\n";
        json meta = json::object();
        for (const auto &[k, v] : r.metadata) {
            meta[k] = v;
        }
        list.push_back({{"name", r.name}, {"value", r.value}, {"std", r.std ? json(*r.std) : json(nullptr)},
                        {"metadata", meta}});
    }
    if (!a.out_path.empty()) {
        io::write_json_file(a.out_path, {{"metadata", io::metadata(joined(args), config)}, {"metrics", list}});
    }
    return kOk;
}

// ---------------------------------------------------------------- reproduce
struct ReproduceArgs {
    std::string target;
    std::optional<std::uint64_t> seed;
    std::string out_dir = ".";
    std::optional<double> mean_counts;
    std::optional<int> samples;
    bool serial = false;
    bool sampled = false;
};

// Documented defaults per report; see README.
ExperimentConfig reproduce_config(const ReproduceArgs &a, std::uint64_t seed) {
    ExperimentConfig c;
    c.seed = seed;
    c.execution = a.serial ? Execution::Serial : Execution::Parallel;
    if (a.target == "table2-sim") {
        c.calibrate_noise = true;
        c.mean_counts = 1e4;
    } else if (a.target == "entangler") {
        c.calibrate_noise = true;
        c.mean_counts = 1e4;
    } else if (a.target == "discord") {
        c.mean_counts = 1e5;
    } else if (a.target == "table3") {
        c.calibrate_noise = true;
        c.mean_counts = 1e4;
        c.table3_sampled = a.sampled;
    }
    if (a.mean_counts) {
        c.mean_counts = *a.mean_counts;
    }
    if (a.samples) {
        c.monte_carlo_samples = *a.samples;
    }
    return c;
}

int cmd_reproduce(const ReproduceArgs &a, std::ostream &out) {
    static const std::vector<std::string> known{"table1", "table2-sim", "entangler", "discord", "table3"};
    if (std::find(known.begin(), known.end(), a.target) == known.end()) {
        throw InvalidArgument("unknown report '" + a.target + "'");
    }
    TableReport report;
    if (a.target == "table1") {
        report = run_table1();
    } else {
        bool needs_seed = a.target != "table3" || a.sampled;
        std::uint64_t seed = needs_seed ? resolve_seed(a.seed, out) : a.seed.value_or(1);
        ExperimentConfig c = reproduce_config(a, seed);
        if (a.target == "table2-sim") {
            report = run_tomography_suite(c);
        } else if (a.target == "entangler") {
            report = run_entangler_demo(c);
        } else if (a.target == "discord") {
            report = run_discord_demo(c);
        } else {
            report = run_table3(c);
        }
    }
    std::filesystem::path dir(a.out_dir);
    io::write_json_file(dir / (a.target + ".json"), report.to_json());
    io::write_text_file(dir / (a.target + ".csv"), report.to_csv());
    for (const ReportRow &r : report.rows) {
        out << std::left << std::setw(52) << r.label << " " << fmt(r.value);
        if (r.std) {
            out << " +- " << fmt(*r.std);
        }
        out << "\n";
    }
    out << "wrote " << (dir / (a.target + ".json")).string() << " and " << (dir / (a.target + ".csv")).string()
        << "\n";
    return kOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"nlconv: post-selected two-photon conversion gate toolkit", "nlconv"};
    app.set_version_flag("--version", io::tool_version());
    app.require_subcommand(1);

    GateArgs gate_args;
    std::string gate_out;
    CLI::App *gate = app.add_subcommand("gate", "print and export the 4x4 gate operator");
    gate_args.attach(gate);
    gate->add_option("--out", gate_out, "matrix JSON file");

    GateArgs conv_args;
    std::string conv_in, conv_targets, conv_out;
    CLI::App *convert = app.add_subcommand("convert", "apply the gate to two qubits of a state");
    conv_args.attach(convert);
    convert->add_option("--state-in", conv_in, "input state JSON (default: four-qubit linear cluster)");
    convert->add_option("--targets", conv_targets, "1-based qubit pair, default 2,3 (1,2 for two qubits)");
    convert->add_option("--out", conv_out, "output state JSON");

    CLI::App *tomo = app.add_subcommand("tomo", "simulate or reconstruct tomography data");
    tomo->require_subcommand(1);
    SimulateArgs sim;
    CLI::App *simulate = tomo->add_subcommand("simulate", "draw Poisson coincidence counts");
    sim.gate.attach(simulate);
    simulate->add_option("--chi", sim.chi_path, "process JSON to simulate");
    simulate->add_option("--state", sim.state_path, "two-qubit state JSON to simulate");
    simulate->add_option("--noise", sim.noise_path, "noise JSON applied before sampling");
    simulate->add_option("--prep", sim.prep, "preparation label recorded for state data, e.g. --");
    simulate->add_option("--success", sim.success, "success probability scaling state counts");
    simulate->add_option("--mean-counts", sim.mean_counts, "counts per setting at unit success")->required();
    simulate->add_option("--seed", sim.seed, "root seed (generated and printed if absent)");
    simulate->add_option("--out", sim.out_path, "dataset JSON")->required();

    std::string rec_data, rec_type, rec_out;
    MleOptions rec_mle;
    CLI::App *reconstruct = tomo->add_subcommand("reconstruct", "maximum-likelihood reconstruction");
    reconstruct->add_option("--data", rec_data, "dataset JSON")->required();
    reconstruct->add_option("--type", rec_type, "state or process")->required();
    reconstruct->add_option("--tolerance", rec_mle.tolerance, "log-likelihood gain threshold");
    reconstruct->add_option("--max-iterations", rec_mle.max_iterations, "iteration cap");
    reconstruct->add_option("--out", rec_out, "reconstruction JSON")->required();

    MetricsArgs met;
    CLI::App *metrics = app.add_subcommand("metrics", "evaluate figures of merit");
    metrics->add_option("--chi", met.chi_path, "process JSON (or reconstruction output)");
    metrics->add_option("--state", met.state_path, "state JSON (or reconstruction output)");
    metrics->add_option("--target", met.target_path, "reference state or process JSON");
    metrics->add_option("--target-preset", met.target_preset, "ideal process of a preset as reference");
    metrics->add_option("--target-kind", met.target_kind, "named reference state");
    metrics->add_option("--metric", met.metrics, "metric name (repeatable)");
    metrics->add_flag("--optimize-phases", met.optimize_phases, "add the phase-optimized process fidelity");
    metrics->add_option("--monte-carlo", met.monte_carlo, "bootstrap samples for stds (needs --data)");
    metrics->add_option("--data", met.data_path, "dataset the estimate was reconstructed from");
    metrics->add_option("--seed", met.seed, "Monte Carlo seed (generated and printed if absent)");
    metrics->add_option("--out", met.out_path, "metric report JSON");

    ReproduceArgs rep;
    CLI::App *reproduce = app.add_subcommand("reproduce", "run a table or demonstration pipeline");
    reproduce->add_option("target", rep.target, "table1 | table2-sim | entangler | discord | table3")->required();
    reproduce->add_option("--seed", rep.seed, "root seed (generated and printed if absent)");
    reproduce->add_option("--out-dir", rep.out_dir, "directory for <target>.json and <target>.csv");
    reproduce->add_option("--mean-counts", rep.mean_counts, "override the default counts per setting");
    reproduce->add_option("--samples", rep.samples, "override the Monte Carlo sample count (default 1000)");
    reproduce->add_flag("--serial", rep.serial, "run Monte Carlo loops serially (same numbers)");
    reproduce->add_flag("--sampled", rep.sampled, "table3: use reconstructed channels with Monte Carlo stds");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidArgument;
    }

    try {
        if (gate->parsed()) {
            return cmd_gate(gate_args, gate_out, args, out);
        }
        if (convert->parsed()) {
            return cmd_convert(conv_args, conv_in, conv_targets, conv_out, args, out);
        }
        if (simulate->parsed()) {
            return cmd_tomo_simulate(sim, args, out);
        }
        if (reconstruct->parsed()) {
            return cmd_tomo_reconstruct(rec_data, rec_type, rec_mle, rec_out, args, out);
        }
        if (metrics->parsed()) {
            return cmd_metrics(met, args, out);
        }
        if (reproduce->parsed()) {
            return cmd_reproduce(rep, out);
        }
    } catch (const InvalidArgument &e) {
        err << "error: " << e.what() << "\n";
        return kInvalidArgument;
    } catch (const DegenerateOutcome &e) {
        err << "error: " << e.what() << " (success probability " << e.probability() << ")\n";
        return kDegenerateOutcome;
    } catch (const NumericalDomainError &e) {
        err << "error: " << e.what() << "\n";
        return kNumericalDomain;
    } catch (const NoSolution &e) {
        err << "error: " << e.what() << "\n";
        return kNumericalDomain;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kFailure;
}

}  // namespace nlconv::cli
