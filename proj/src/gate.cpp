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

#include "nlconv/gate.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace nlconv {

namespace {

constexpr double kPi = std::numbers::pi;

double canonical_angle(double theta) {
    if (!std::isfinite(theta)) {
        throw InvalidArgument("gate angle must be finite");
    }
    double t = std::fmod(theta, kPi);
    if (t < 0.0) {
        t += kPi;
    }
    if (t >= kPi) {
        t = 0.0;
    }
    return t;
}

// Basis index of a four-qubit label like "HVHV".
Eigen::Index basis_index(std::string_view labels) {
    Eigen::Index index = 0;
    for (char c : labels) {
        index = (index << 1) | (c == 'V' ? 1 : 0);
    }
    return index;
}

}  // namespace

GateSettings::GateSettings(double theta1, double theta2)
    : theta1_(canonical_angle(theta1)), theta2_(canonical_angle(theta2)) {}

GateCoefficients gate_coefficients(const GateSettings &s) {
    double c1 = std::cos(2.0 * s.theta1()), s1 = std::sin(2.0 * s.theta1());
    double c2 = std::cos(2.0 * s.theta2()), s2 = std::sin(2.0 * s.theta2());
    return {c1 * c1, s1 * s1, c2 * c2, s2 * s2, c1 * c2, s1 * s2};
}

ComplexMatrix build_gate(const GateSettings &s) {
    GateCoefficients k = gate_coefficients(s);
    ComplexMatrix g = ComplexMatrix::Zero(4, 4);
    // Rows are outputs, columns inputs; 0=HH 1=HV 2=VH 3=VV.
    g(0, 0) = k.alpha1 - k.beta1;
    g(3, 3) = k.alpha2 - k.beta2;
    g(1, 1) = k.mu1;
    g(2, 1) = -k.mu2;
    g(2, 2) = k.mu1;
    g(1, 2) = -k.mu2;
    return g;
}

GateOutput apply_gate(const GateSettings &s, const PureState &psi) {
    if (psi.qubits() != 2) {
        throw InvalidArgument("apply_gate: expected a two-qubit state");
    }
    ComplexVector out = build_gate(s) * psi.amplitudes();
    NormalizedState n = normalize_state(PureState(out));
    return {n.state, n.norm_squared};
}

PureState cluster_state_c4() {
    ComplexVector v = ComplexVector::Zero(16);
    v(basis_index("HHHH")) = 0.5;
    v(basis_index("HHVV")) = 0.5;
    v(basis_index("VVHH")) = 0.5;
    v(basis_index("VVVV")) = -0.5;
    return PureState(v);
}

GateOutput convert_cluster(const GateSettings &s) {
    const std::array<int, 2> targets{1, 2};
    ComplexVector out = apply_operator(cluster_state_c4().amplitudes(), build_gate(s), targets);
    NormalizedState n = normalize_state(PureState(out));
    return {n.state, n.norm_squared};
}

ComplexVector converted_cluster_closed_form(const GateSettings &s) {
    GateCoefficients k = gate_coefficients(s);
    ComplexVector v = ComplexVector::Zero(16);
    v(basis_index("HHHH")) = 0.5 * (k.alpha1 - k.beta1);
    v(basis_index("VVVV")) = -0.5 * (k.alpha2 - k.beta2);
    v(basis_index("HHVV")) = 0.5 * k.mu1;
    v(basis_index("VVHH")) = 0.5 * k.mu1;
    v(basis_index("HVHV")) = -0.5 * k.mu2;
    v(basis_index("VHVH")) = -0.5 * k.mu2;
    return v;
}

DickeAngles dicke_angles() {
    const double r5 = std::sqrt(5.0);
    return {0.5 * std::asin(std::sqrt((5.0 + r5) / 10.0)), 0.5 * std::asin(std::sqrt((5.0 - r5) / 10.0))};
}

PresetName parse_preset_name(std::string_view name) {
    if (name == "cluster-identity") return PresetName::ClusterIdentity;
    if (name == "ghz") return PresetName::Ghz;
    if (name == "dicke") return PresetName::Dicke;
    if (name == "bell-pair") return PresetName::BellPair;
    if (name == "entangler") return PresetName::Entangler;
    if (name == "discord-demo") return PresetName::DiscordDemo;
    throw InvalidArgument("unknown preset '" + std::string(name) + "'");
}

std::string_view preset_name_string(PresetName name) {
    switch (name) {
        case PresetName::ClusterIdentity:
            return "cluster-identity";
        case PresetName::Ghz:
            return "ghz";
        case PresetName::Dicke:
            return "dicke";
        case PresetName::BellPair:
            return "bell-pair";
        case PresetName::Entangler:
            return "entangler";
        case PresetName::DiscordDemo:
            return "discord-demo";
    }
    return "unknown";
}

ConversionPreset preset(PresetName name) {
    switch (name) {
        case PresetName::ClusterIdentity:
            return {name, GateSettings(0.0, 0.0), Rational{1, 1}};
        case PresetName::Ghz:
            return {name, GateSettings(0.0, kPi / 4), Rational{1, 2}};
        case PresetName::Dicke: {
            DickeAngles d = dicke_angles();
            return {name, GateSettings(d.theta_plus, d.theta_minus), Rational{3, 10}};
        }
        case PresetName::BellPair:
            return {name, GateSettings(3 * kPi / 8, kPi / 8), Rational{1, 4}};
        case PresetName::Entangler:
            return {name, GateSettings(3 * kPi / 8, kPi / 8), std::nullopt};
        case PresetName::DiscordDemo:
            return {name, GateSettings(kPi / 3, 0.0), std::nullopt};
    }
    throw InvalidArgument("unknown preset");
}

ConversionPreset preset(std::string_view name) { return preset(parse_preset_name(name)); }

std::vector<PresetName> conversion_presets() {
    return {PresetName::ClusterIdentity, PresetName::Ghz, PresetName::Dicke, PresetName::BellPair};
}

TargetKind parse_target_kind(std::string_view kind) {
    if (kind == "cluster") return TargetKind::Cluster;
    if (kind == "ghz4") return TargetKind::Ghz4;
    if (kind == "dicke4_2") return TargetKind::Dicke4_2;
    if (kind == "bell_pair_product") return TargetKind::BellPairProduct;
    if (kind == "psi_plus") return TargetKind::PsiPlus;
    if (kind == "phi_plus") return TargetKind::PhiPlus;
    throw InvalidArgument("unknown target kind '" + std::string(kind) + "'");
}

PureState target_state(TargetKind kind) {
    const double r2 = 1.0 / std::sqrt(2.0);
    switch (kind) {
        case TargetKind::Cluster:
            return cluster_state_c4();
        case TargetKind::Ghz4: {
            ComplexVector v = ComplexVector::Zero(16);
            v(basis_index("HHHH")) = r2;
            v(basis_index("VVVV")) = r2;
            return PureState(v);
        }
        case TargetKind::Dicke4_2: {
            ComplexVector v = ComplexVector::Zero(16);
            for (Eigen::Index i = 0; i < 16; ++i) {
                if (std::popcount(static_cast<unsigned>(i)) == 2) {
                    v(i) = 1.0 / std::sqrt(6.0);
                }
            }
            return PureState(v);
        }
        case TargetKind::BellPairProduct: {
            // (|HV>+|VH>) on qubits 1,4 times (|HV>+|VH>) on qubits 2,3.
            ComplexVector v = ComplexVector::Zero(16);
            for (const char *q14 : {"HV", "VH"}) {
                for (const char *q23 : {"HV", "VH"}) {
                    std::string label{q14[0], q23[0], q23[1], q14[1]};
                    v(basis_index(label)) = 0.5;
                }
            }
            return PureState(v);
        }
        case TargetKind::PsiPlus: {
            ComplexVector v = ComplexVector::Zero(4);
            v(1) = r2;
            v(2) = r2;
            return PureState(v);
        }
        case TargetKind::PhiPlus: {
            ComplexVector v = ComplexVector::Zero(4);
            v(0) = r2;
            v(3) = r2;
            return PureState(v);
        }
    }
    throw InvalidArgument("unknown target kind");
}

std::vector<ConversionRow> conversion_table_rows() {
    DickeAngles d = dicke_angles();
    const auto none = LocalCorrection::None;
    return {
        {PresetName::ClusterIdentity, GateSettings(0.0, 0.0), {1, 1}, true, none},
        {PresetName::ClusterIdentity, GateSettings(kPi / 2, kPi / 2), {1, 1}, false, none},
        {PresetName::Ghz, GateSettings(0.0, kPi / 4), {1, 2}, true, none},
        {PresetName::Ghz, GateSettings(kPi / 2, kPi / 4), {1, 2}, false, none},
        {PresetName::Ghz, GateSettings(kPi / 4, 0.0), {1, 2}, false, none},
        {PresetName::Ghz, GateSettings(kPi / 4, kPi / 2), {1, 2}, false, none},
        {PresetName::Dicke, GateSettings(d.theta_plus, d.theta_minus), {3, 10}, true, none},
        {PresetName::Dicke, GateSettings(d.theta_minus, d.theta_plus), {3, 10}, false,
         LocalCorrection::PhaseOnEveryQubit},
        {PresetName::BellPair, GateSettings(3 * kPi / 8, kPi / 8), {1, 4}, true, none},
        {PresetName::BellPair, GateSettings(kPi / 8, 3 * kPi / 8), {1, 4}, false, none},
    };
}

PureState conversion_reference_state(PresetName name) {
    switch (name) {
        case PresetName::ClusterIdentity:
            return cluster_state_c4();
        case PresetName::Ghz:
            return target_state(TargetKind::Ghz4);
        case PresetName::Dicke: {
            // Amplitude pattern of the converted state at the Dicke angles;
            // the |HHHH>,|VVVV> terms make it differ from the symmetric D(4,2).
            const double a = 1.0 / std::sqrt(6.0);
            ComplexVector v = ComplexVector::Zero(16);
            v(basis_index("HHHH")) = -a;
            v(basis_index("VVVV")) = -a;
            v(basis_index("HHVV")) = a;
            v(basis_index("VVHH")) = a;
            v(basis_index("HVHV")) = -a;
            v(basis_index("VHVH")) = -a;
            return PureState(v);
        }
        case PresetName::BellPair:
            return target_state(TargetKind::BellPairProduct);
        default:
            throw InvalidArgument("conversion_reference_state: not a cluster conversion preset");
    }
}

PureState apply_local_correction(const PureState &state, LocalCorrection correction) {
    if (correction == LocalCorrection::None) {
        return state;
    }
    ComplexVector v = state.amplitudes();
    const std::array<Complex, 4> powers_of_i{Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)};
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        v(k) *= powers_of_i[std::popcount(static_cast<unsigned>(k)) % 4];
    }
    return PureState(v);
}

ChoiProcess ideal_choi(const GateSettings &s) {
    ComplexMatrix g = build_gate(s);
    if (g.norm() <= kDegenerateThreshold) {
        throw DegenerateOutcome("ideal_choi: gate operator vanishes", 0.0);
    }
    return choi_from_operator(g);
}

}  // namespace nlconv
