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

#ifndef NLCONV_GATE_HPP
#define NLCONV_GATE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nlconv/core.hpp"

namespace nlconv {

/// Half-wave-plate angles of the conversion gate, canonicalized into [0, pi).
class GateSettings {
   public:
    GateSettings(double theta1, double theta2);

    double theta1() const { return theta1_; }
    double theta2() const { return theta2_; }

    friend bool operator==(const GateSettings &, const GateSettings &) = default;

   private:
    double theta1_;
    double theta2_;
};

struct GateCoefficients {
    double alpha1, beta1, alpha2, beta2, mu1, mu2;
};

GateCoefficients gate_coefficients(const GateSettings &s);

/// 4x4 post-selected gate operator in the |HH>,|HV>,|VH>,|VV> basis.
///
/// Diagonal corners carry (alpha_k - beta_k). On the {|HV>,|VH>} block the
/// gate mixes the two states: G|HV> = mu1|HV> - mu2|VH> and
/// G|VH> = mu1|VH> - mu2|HV>. This is the form under which acting on
/// qubits 2,3 of the linear cluster state produces the -mu2 |HVHV>, -mu2 |VHVH>
/// terms of the converted state.
ComplexMatrix build_gate(const GateSettings &s);

struct GateOutput {
    PureState state;
    double success_probability;
};

GateOutput apply_gate(const GateSettings &s, const PureState &psi);

/// (|HHHH> + |HHVV> + |VVHH> - |VVVV>) / 2.
PureState cluster_state_c4();

/// Gate applied to qubits 2,3 (indices 1,2) of the cluster state.
GateOutput convert_cluster(const GateSettings &s);

/// Closed-form amplitudes of the converted cluster state before
/// renormalization, written term by term.
ComplexVector converted_cluster_closed_form(const GateSettings &s);

struct DickeAngles {
    double theta_plus;
    double theta_minus;
};

/// sin(2 theta_pm)^2 = (5 pm sqrt 5) / 10 with 2 theta_pm in the first quadrant.
DickeAngles dicke_angles();

struct Rational {
    int numerator;
    int denominator;
    double value() const { return static_cast<double>(numerator) / denominator; }
};

enum class PresetName { ClusterIdentity, Ghz, Dicke, BellPair, Entangler, DiscordDemo };

PresetName parse_preset_name(std::string_view name);
std::string_view preset_name_string(PresetName name);

struct ConversionPreset {
    PresetName name;
    GateSettings settings;
    std::optional<Rational> expected_success;
};

ConversionPreset preset(PresetName name);
ConversionPreset preset(std::string_view name);

/// The four cluster-conversion presets in table order.
std::vector<PresetName> conversion_presets();

enum class TargetKind { Cluster, Ghz4, Dicke4_2, BellPairProduct, PsiPlus, PhiPlus };

TargetKind parse_target_kind(std::string_view kind);
PureState target_state(TargetKind kind);

/// Local correction mapping an alternate-row output onto the canonical one.
enum class LocalCorrection {
    None,
    PhaseOnEveryQubit,  // diag(1, i) on all four qubits, then global phase
};

struct ConversionRow {
    PresetName preset;
    GateSettings settings;
    Rational expected_success;
    bool canonical;
    LocalCorrection correction;
};

/// Every angle row of the conversion table, canonical rows first in each group.
std::vector<ConversionRow> conversion_table_rows();

/// Normalized closed-form state each cluster conversion is expected to produce.
PureState conversion_reference_state(PresetName preset);

PureState apply_local_correction(const PureState &state, LocalCorrection correction);

/// Choi process of the ideal gate with unit-trace storage.
ChoiProcess ideal_choi(const GateSettings &s);

}  // namespace nlconv

#endif
