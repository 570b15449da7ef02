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

#include "nlconv/io.hpp"

#include <fstream>
#include <sstream>

#ifndef NLCONV_VERSION
#define NLCONV_VERSION "0.0.0"
#endif

namespace nlconv::io {

namespace {

// Every schema violation surfaces as InvalidArgument; nlohmann's own
// exceptions are translated at this boundary.
template <class F>
auto guarded(const char *what, F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception &e) {
        throw InvalidArgument(std::string(what) + ": " + e.what());
    }
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw InvalidArgument("complex entry must be [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

json matrix_to_json(const ComplexMatrix &m) {
    json entries = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            entries.push_back(complex_to_json(m(i, j)));
        }
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

ComplexMatrix matrix_from_json(const json &j) {
    return guarded("matrix", [&] {
        long rows = j.at("rows").get<long>();
        long cols = j.at("cols").get<long>();
        const json &entries = j.at("entries");
        if (rows <= 0 || cols <= 0 || !entries.is_array() || static_cast<long>(entries.size()) != rows * cols) {
            throw InvalidArgument("matrix: entry count must equal rows * cols");
        }
        ComplexMatrix m(rows, cols);
        for (long i = 0; i < rows; ++i) {
            for (long k = 0; k < cols; ++k) {
                m(i, k) = complex_from_json(entries[static_cast<std::size_t>(i * cols + k)]);
            }
        }
        return m;
    });
}

json state_to_json(const PureState &s) {
    json data = json::array();
    for (Eigen::Index i = 0; i < s.amplitudes().size(); ++i) {
        data.push_back(complex_to_json(s.amplitudes()(i)));
    }
    return {{"qubits", s.qubits()}, {"kind", "pure"}, {"data", data}};
}

json state_to_json(const DensityMatrix &rho) {
    return {{"qubits", rho.qubits()}, {"kind", "density"}, {"data", matrix_to_json(rho.matrix())}};
}

std::variant<PureState, DensityMatrix> state_from_json(const json &j) {
    return guarded("state", [&]() -> std::variant<PureState, DensityMatrix> {
        int qubits = j.at("qubits").get<int>();
        std::string kind = j.at("kind").get<std::string>();
        const json &data = j.at("data");
        if (kind == "pure") {
            if (!data.is_array()) {
                throw InvalidArgument("state: pure data must be an amplitude list");
            }
            ComplexVector v(static_cast<Eigen::Index>(data.size()));
            for (std::size_t i = 0; i < data.size(); ++i) {
                v(static_cast<Eigen::Index>(i)) = complex_from_json(data[i]);
            }
            PureState s(v);
            if (s.qubits() != qubits) {
                throw InvalidArgument("state: qubit count does not match amplitude count");
            }
            return s;
        }
        if (kind == "density") {
            DensityMatrix rho(matrix_from_json(data));
            if (rho.qubits() != qubits) {
                throw InvalidArgument("state: qubit count does not match matrix size");
            }
            return rho;
        }
        throw InvalidArgument("state: kind must be 'pure' or 'density'");
    });
}

DensityMatrix density_from_json(const json &j) {
    auto s = state_from_json(j);
    if (auto *pure = std::get_if<PureState>(&s)) {
        return DensityMatrix::from_pure(*pure);
    }
    return std::get<DensityMatrix>(s);
}

json choi_to_json(const ChoiProcess &chi) {
    return {{"kind", "choi"}, {"success_scale", chi.success_scale()}, {"matrix", matrix_to_json(chi.matrix())}};
}

ChoiProcess choi_from_json(const json &j) {
    return guarded("process", [&] {
        if (j.at("kind").get<std::string>() != "choi") {
            throw InvalidArgument("process: kind must be 'choi'");
        }
        return ChoiProcess(matrix_from_json(j.at("matrix")), j.at("success_scale").get<double>());
    });
}

json dataset_to_json(const CoincidenceDataset &data) {
    json records = json::array();
    for (const SettingRecord &r : data.records) {
        json prep = nullptr;
        if (r.prep) {
            prep = json::array({std::string(1, prep_label_char(r.prep->labels[0])),
                                std::string(1, prep_label_char(r.prep->labels[1]))});
        }
        json basis = json::array(
            {std::string(1, basis_label_char(r.basis.bases[0])), std::string(1, basis_label_char(r.basis.bases[1]))});
        json counts = {{"00", r.counts[0]}, {"01", r.counts[1]}, {"10", r.counts[2]}, {"11", r.counts[3]}};
        records.push_back({{"prep", prep}, {"basis", basis}, {"counts", counts}});
    }
    json out = {{"mean_counts", data.mean_counts}, {"records", records}};
    out["seed"] = data.seed ? json(*data.seed) : json(nullptr);
    if (!data.generator.empty()) {
        out["generator"] = data.generator;
    }
    return out;
}

CoincidenceDataset dataset_from_json(const json &j) {
    return guarded("dataset", [&] {
        CoincidenceDataset data;
        data.mean_counts = j.at("mean_counts").get<double>();
        if (j.contains("seed") && !j.at("seed").is_null()) {
            data.seed = j.at("seed").get<std::uint64_t>();
        }
        if (j.contains("generator")) {
            data.generator = j.at("generator").get<std::string>();
        }
        for (const json &r : j.at("records")) {
            SettingRecord rec{};
            const json &prep = r.at("prep");
            if (!prep.is_null()) {
                if (!prep.is_array() || prep.size() != 2) {
                    throw InvalidArgument("dataset: prep must be two labels or null");
                }
                rec.prep = PreparationSetting{
                    {parse_prep_label(prep[0].get<std::string>()), parse_prep_label(prep[1].get<std::string>())}};
            }
            const json &basis = r.at("basis");
            if (!basis.is_array() || basis.size() != 2) {
                throw InvalidArgument("dataset: basis must be two labels");
            }
            rec.basis = MeasurementSetting{
                {parse_basis_label(basis[0].get<std::string>()), parse_basis_label(basis[1].get<std::string>())}};
            const json &counts = r.at("counts");
            static constexpr const char *keys[] = {"00", "01", "10", "11"};
            for (int o = 0; o < 4; ++o) {
                rec.counts[o] = counts.at(keys[o]).get<std::int64_t>();
            }
            data.records.push_back(rec);
        }
        validate_dataset(data);
        return data;
    });
}

json noise_to_json(const NoiseSpec &noise) {
    json out = {{"depolarizing_p", noise.depolarizing_p}, {"dephasing_p", noise.dephasing_p}};
    if (noise.mode_phases) {
        const auto &p = noise.mode_phases->phases();
        out["mode_phases"] = json::array({p[0], p[1], p[2], p[3]});
    } else {
        out["mode_phases"] = nullptr;
    }
    return out;
}

NoiseSpec noise_from_json(const json &j) {
    return guarded("noise", [&] {
        NoiseSpec n;
        n.depolarizing_p = j.value("depolarizing_p", 0.0);
        n.dephasing_p = j.value("dephasing_p", 0.0);
        if (j.contains("mode_phases") && !j.at("mode_phases").is_null()) {
            const json &p = j.at("mode_phases");
            if (!p.is_array() || p.size() != 4) {
                throw InvalidArgument("noise: mode_phases must hold four phases");
            }
            n.mode_phases = PhaseCorrection({p[0].get<double>(), p[1].get<double>(), p[2].get<double>(), p[3].get<double>()});
        }
        n.validate();
        return n;
    });
}

template <class Estimate>
json report_to_json(const ReconstructionReport<Estimate> &report) {
    json out = {{"iterations", report.iterations},
                {"final_log_likelihood", report.final_log_likelihood},
                {"converged", report.converged},
                {"diluted_steps", report.diluted_steps}};
    if constexpr (std::is_same_v<Estimate, ChoiProcess>) {
        out["estimate"] = choi_to_json(report.estimate);
        out["success_scale_estimator"] = "total_counts / (324 * mean_counts)";
    } else {
        out["estimate"] = state_to_json(report.estimate);
    }
    return out;
}

template json report_to_json(const ReconstructionReport<DensityMatrix> &);
template json report_to_json(const ReconstructionReport<ChoiProcess> &);

std::string tool_version() { return NLCONV_VERSION; }

json metadata(const std::string &command, const json &config) {
    return {{"tool", "nlconv"}, {"version", tool_version()}, {"command", command}, {"config", config}};
}

json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument("cannot open " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw InvalidArgument("malformed JSON in " + path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path &path, const std::string &text) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InvalidArgument("cannot write " + path.string());
    }
    out << text;
}

void write_json_file(const std::filesystem::path &path, const json &j) { write_text_file(path, j.dump(2) + "\n"); }

}  // namespace nlconv::io
