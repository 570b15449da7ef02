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

#ifndef NLCONV_CORE_HPP
#define NLCONV_CORE_HPP

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <span>
#include <string_view>
#include <vector>

#include "nlconv/errors.hpp"

// Basis convention used everywhere: |H> <-> 0, |V> <-> 1, qubit 0 is the most
// significant (leftmost) tensor factor. Choi matrices are ordered input-first,
// |ab>_in |cd>_out.

namespace nlconv {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr int kMaxQubits = 4;
inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;
/// Eigenvalues in [-kClampTolerance, 0) are clamped to zero; below that is an error.
inline constexpr double kClampTolerance = 1e-10;
inline constexpr double kDegenerateThreshold = 1e-14;

/// max_ij |M_ij - conj(M_ji)|. Requires a square matrix.
double hermiticity_defect(const ComplexMatrix &m);

/// (M + M^dagger) / 2.
ComplexMatrix hermitian_part(const ComplexMatrix &m);

struct HermitianSpectrum {
    Eigen::VectorXd values;  // ascending
    ComplexMatrix vectors;   // columns
};

/// Eigendecomposition of a Hermitian matrix. Only the lower triangle is read.
HermitianSpectrum hermitian_eigen(const ComplexMatrix &m);

int qubit_count_for_dimension(Eigen::Index dim);

class PureState {
   public:
    /// Accepts 2^n amplitudes for n in 1..4 with norm^2 <= 1 + 1e-12.
    explicit PureState(ComplexVector amplitudes);

    /// Product state from per-qubit labels drawn from "HV+-RL", e.g. "H+".
    static PureState product(std::string_view labels);

    int qubits() const { return qubits_; }
    const ComplexVector &amplitudes() const { return amplitudes_; }
    double norm_squared() const { return amplitudes_.squaredNorm(); }
    bool normalized() const { return normalized_; }
    ComplexMatrix projector() const { return amplitudes_ * amplitudes_.adjoint(); }

   private:
    ComplexVector amplitudes_;
    int qubits_;
    bool normalized_;
};

/// Single-qubit ket for one of the labels H, V, +, -, R, L.
ComplexVector single_qubit_ket(char label);

class DensityMatrix {
   public:
    /// Validates Hermiticity, unit trace and eigenvalues >= -1e-10.
    explicit DensityMatrix(ComplexMatrix m);

    static DensityMatrix from_pure(const PureState &state);
    static DensityMatrix maximally_mixed(int qubits);

    int qubits() const { return qubits_; }
    Eigen::Index dimension() const { return matrix_.rows(); }
    const ComplexMatrix &matrix() const { return matrix_; }

   private:
    ComplexMatrix matrix_;
    int qubits_;
};

/// Two-qubit process on H_in (x) H_out, stored unit-trace. The trace-decreasing
/// part lives in success_scale: Tr of the Choi matrix built with a normalized
/// maximally entangled state, so the identity channel has scale 1.
class ChoiProcess {
   public:
    static constexpr Eigen::Index kDimension = 16;

    ChoiProcess(ComplexMatrix choi, double success_scale);

    /// Splits an unnormalized Choi matrix into unit-trace part and scale.
    static ChoiProcess from_unnormalized(const ComplexMatrix &choi);

    const ComplexMatrix &matrix() const { return choi_; }
    double success_scale() const { return success_scale_; }
    bool trace_normalized() const { return true; }

   private:
    ComplexMatrix choi_;
    double success_scale_;
};

/// Choi process of the single-Kraus map rho -> K rho K^dagger on two qubits.
ChoiProcess choi_from_operator(const ComplexMatrix &kraus);

ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexVector tensor_product(const ComplexVector &a, const ComplexVector &b);

/// Reduced state on the qubits in `keep` (kept in ascending order).
DensityMatrix partial_trace(const DensityMatrix &m, std::span<const int> keep);

/// Transpose on one qubit of a two-qubit state.
ComplexMatrix partial_transpose(const DensityMatrix &m, int subsystem);

/// Reorders tensor factors: qubit p of the result is qubit order[p] of m.
ComplexMatrix permute_qubits(const ComplexMatrix &m, std::span<const int> order);
ComplexVector permute_qubits(const ComplexVector &v, std::span<const int> order);

/// Hermitian PSD square root. Throws NumericalDomainError on non-Hermitian
/// input or eigenvalues below -1e-10.
ComplexMatrix matrix_sqrt(const ComplexMatrix &m);

struct ChannelOutput {
    DensityMatrix state;
    double probability;
};

/// rho_out = Tr_in[(rho^T (x) 1) chi], renormalized, with success probability
/// 4 * success_scale * Tr[...] so the identity channel gives 1.
ChannelOutput apply_choi_channel(const DensityMatrix &rho_in, const ChoiProcess &chi);

/// Applies chi to the ordered qubit pair `targets` of an n-qubit state.
ChannelOutput embed_two_qubit_channel(
    const DensityMatrix &rho, const ChoiProcess &chi, std::array<int, 2> targets);

/// Applies a 2^k x 2^k operator to the listed qubits of a pure state, no
/// renormalization.
ComplexVector apply_operator(const ComplexVector &state, const ComplexMatrix &op, std::span<const int> targets);

struct NormalizedState {
    PureState state;
    double norm_squared;
};

NormalizedState normalize_state(const PureState &s);

/// |<a|b>|^2 for normalized pure states.
double state_overlap(const PureState &a, const PureState &b);

}  // namespace nlconv

#endif
