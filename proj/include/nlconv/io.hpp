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

#ifndef NLCONV_IO_HPP
#define NLCONV_IO_HPP

// JSON schemas shared by the CLI and the pipelines.
//
//   matrix:   {"rows": N, "cols": M, "entries": [[re, im], ...]}  row-major
//   state:    {"qubits": n, "kind": "pure"|"density", "data": amplitudes | matrix}
//   process:  {"kind": "choi", "success_scale": s, "matrix": matrix}
//   dataset:  {"mean_counts": x, "seed": s, "generator": "...", "records": [
//                {"prep": ["H","+"] | null, "basis": ["Z","X"],
//                 "counts": {"00": n, "01": n, "10": n, "11": n}}, ...]}
//   noise:    {"depolarizing_p": x, "dephasing_p": y, "mode_phases": [p1, p2, p3, p4]}

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "nlconv/core.hpp"
#include "nlconv/noise.hpp"
#include "nlconv/tomography.hpp"

namespace nlconv::io {

using json = nlohmann::json;

json matrix_to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const json &j);

json state_to_json(const PureState &s);
json state_to_json(const DensityMatrix &rho);
std::variant<PureState, DensityMatrix> state_from_json(const json &j);
/// Pure states are promoted to their projector (must be normalized).
DensityMatrix density_from_json(const json &j);

json choi_to_json(const ChoiProcess &chi);
ChoiProcess choi_from_json(const json &j);

json dataset_to_json(const CoincidenceDataset &data);
CoincidenceDataset dataset_from_json(const json &j);

json noise_to_json(const NoiseSpec &noise);
NoiseSpec noise_from_json(const json &j);

template <class Estimate>
json report_to_json(const ReconstructionReport<Estimate> &report);

/// {"tool", "version"} plus the given fields.
json metadata(const std::string &command, const json &config);

std::string tool_version();

/// Parses a file; malformed JSON or missing files raise InvalidArgument.
json read_json_file(const std::filesystem::path &path);
void write_json_file(const std::filesystem::path &path, const json &j);
void write_text_file(const std::filesystem::path &path, const std::string &text);

}  // namespace nlconv::io

#endif
