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

#include "nlconv/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

namespace nlconv {

namespace {

std::string describe(double x) {
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
}

// Index bit of qubit q in an n-qubit register (qubit 0 most significant).
inline int bit_of(Eigen::Index index, int q, int n) { return static_cast<int>((index >> (n - 1 - q)) & 1); }

void check_square(const ComplexMatrix &m, const char *where) {
    if (m.rows() != m.cols()) {
        throw InvalidArgument(std::string(where) + ": matrix is not square");
    }
}

// Core of the Choi action on the first two qubits of an already permuted
// state: out[(c,r),(c',r')] = sum_{a,a'} rho[(a',r),(a,r')] chi[(a',c),(a,c')].
ComplexMatrix choi_act_on_leading_pair(const ComplexMatrix &rho, const ComplexMatrix &chi) {
    const Eigen::Index rest = rho.rows() / 4;
    ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
    for (Eigen::Index ap = 0; ap < 4; ++ap) {
        for (Eigen::Index a = 0; a < 4; ++a) {
            auto chi_block = chi.block(ap * 4, a * 4, 4, 4);
            auto rho_block = rho.block(ap * rest, a * rest, rest, rest);
            for (Eigen::Index c = 0; c < 4; ++c) {
                for (Eigen::Index cp = 0; cp < 4; ++cp) {
                    Complex w = chi_block(c, cp);
                    if (w == Complex(0.0)) {
                        continue;
                    }
                    out.block(c * rest, cp * rest, rest, rest) += w * rho_block;
                }
            }
        }
    }
    return out;
}

}  // namespace

double hermiticity_defect(const ComplexMatrix &m) {
    check_square(m, "hermiticity_defect");
    if (m.size() == 0) {
        return 0.0;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

ComplexMatrix hermitian_part(const ComplexMatrix &m) {
    check_square(m, "hermitian_part");
    return 0.5 * (m + m.adjoint());
}

HermitianSpectrum hermitian_eigen(const ComplexMatrix &m) {
    check_square(m, "hermitian_eigen");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
    if (solver.info() != Eigen::Success) {
        throw NumericalDomainError("hermitian_eigen: eigensolver did not converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

int qubit_count_for_dimension(Eigen::Index dim) {
    for (int n = 1; n <= kMaxQubits; ++n) {
        if (dim == (Eigen::Index{1} << n)) {
            return n;
        }
    }
    throw InvalidArgument("dimension " + std::to_string(dim) + " is not 2^n for n in 1..4");
}

PureState::PureState(ComplexVector amplitudes)
    : amplitudes_(std::move(amplitudes)), qubits_(qubit_count_for_dimension(amplitudes_.size())) {
    if (!amplitudes_.allFinite()) {
        throw InvalidArgument("PureState: non-finite amplitude");
    }
    double n2 = amplitudes_.squaredNorm();
    if (n2 > 1.0 + kNormTolerance) {
        throw InvalidArgument("PureState: norm^2 " + describe(n2) + " exceeds 1");
    }
    normalized_ = std::abs(n2 - 1.0) <= kNormTolerance;
}

ComplexVector single_qubit_ket(char label) {
    const double r = 1.0 / std::sqrt(2.0);
    ComplexVector v(2);
    switch (label) {
        case 'H':
            v << 1.0, 0.0;
            break;
        case 'V':
            v << 0.0, 1.0;
            break;
        case '+':
            v << r, r;
            break;
        case '-':
            v << r, -r;
            break;
        case 'R':
            v << r, Complex(0.0, r);
            break;
        case 'L':
            v << r, Complex(0.0, -r);
            break;
        default:
            throw InvalidArgument(std::string("unknown polarization label '") + label + "'");
    }
    return v;
}

PureState PureState::product(std::string_view labels) {
    if (labels.empty() || labels.size() > static_cast<size_t>(kMaxQubits)) {
        throw InvalidArgument("PureState::product: need 1..4 labels");
    }
    ComplexVector v = single_qubit_ket(labels[0]);
    for (size_t k = 1; k < labels.size(); ++k) {
        v = tensor_product(v, single_qubit_ket(labels[k]));
    }
    return PureState(std::move(v));
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)), qubits_(0) {
    check_square(matrix_, "DensityMatrix");
    qubits_ = qubit_count_for_dimension(matrix_.rows());
    if (!matrix_.allFinite()) {
        throw NumericalDomainError("DensityMatrix: non-finite entry");
    }
    double defect = hermiticity_defect(matrix_);
    if (defect > kHermitianTolerance) {
        throw NumericalDomainError("DensityMatrix: not Hermitian (defect " + describe(defect) + ")");
    }
    double tr = matrix_.trace().real();
    if (std::abs(tr - 1.0) > kTraceTolerance) {
        throw NumericalDomainError("DensityMatrix: trace " + describe(tr) + " != 1");
    }
    double lowest = hermitian_eigen(matrix_).values(0);
    if (lowest < -kClampTolerance) {
        throw NumericalDomainError("DensityMatrix: negative eigenvalue " + describe(lowest));
    }
}

DensityMatrix DensityMatrix::from_pure(const PureState &state) {
    if (!state.normalized()) {
        throw InvalidArgument("DensityMatrix::from_pure: state is not normalized");
    }
    return DensityMatrix(state.projector());
}

DensityMatrix DensityMatrix::maximally_mixed(int qubits) {
    if (qubits < 1 || qubits > kMaxQubits) {
        throw InvalidArgument("maximally_mixed: qubit count out of range");
    }
    Eigen::Index d = Eigen::Index{1} << qubits;
    return DensityMatrix(ComplexMatrix::Identity(d, d) / static_cast<double>(d));
}

ChoiProcess::ChoiProcess(ComplexMatrix choi, double success_scale)
    : choi_(std::move(choi)), success_scale_(success_scale) {
    if (choi_.rows() != kDimension || choi_.cols() != kDimension) {
        throw InvalidArgument("ChoiProcess: expected a 16x16 matrix");
    }
    if (!std::isfinite(success_scale_) || success_scale_ < 0.0) {
        throw InvalidArgument("ChoiProcess: success_scale must be finite and nonnegative");
    }
    if (!choi_.allFinite()) {
        throw NumericalDomainError("ChoiProcess: non-finite entry");
    }
    double defect = hermiticity_defect(choi_);
    if (defect > kHermitianTolerance) {
        throw NumericalDomainError("ChoiProcess: not Hermitian (defect " + describe(defect) + ")");
    }
    double tr = choi_.trace().real();
    if (std::abs(tr - 1.0) > kTraceTolerance) {
        throw NumericalDomainError("ChoiProcess: trace " + describe(tr) + " != 1");
    }
    double lowest = hermitian_eigen(choi_).values(0);
    if (lowest < -kClampTolerance) {
        throw NumericalDomainError("ChoiProcess: negative eigenvalue " + describe(lowest));
    }
}

ChoiProcess ChoiProcess::from_unnormalized(const ComplexMatrix &choi) {
    double tr = choi.trace().real();
    if (!(tr > kDegenerateThreshold)) {
        throw DegenerateOutcome("ChoiProcess: Choi matrix has vanishing trace", 0.0);
    }
    return ChoiProcess(hermitian_part(choi) / tr, tr);
}

ChoiProcess choi_from_operator(const ComplexMatrix &kraus) {
    if (kraus.rows() != 4 || kraus.cols() != 4) {
        throw InvalidArgument("choi_from_operator: expected a 4x4 operator");
    }
    // (1 (x) K)|psi+>, |psi+> = sum_ab |ab>|ab> / 2.
    ComplexVector v = ComplexVector::Zero(16);
    for (Eigen::Index a = 0; a < 4; ++a) {
        v.segment(a * 4, 4) = 0.5 * kraus.col(a);
    }
    return ChoiProcess::from_unnormalized(v * v.adjoint());
}

ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexVector tensor_product(const ComplexVector &a, const ComplexVector &b) {
    ComplexVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix &m, std::span<const int> keep) {
    const int n = m.qubits();
    std::vector<int> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    if (kept.empty() || static_cast<int>(kept.size()) >= n ||
        std::adjacent_find(kept.begin(), kept.end()) != kept.end() || kept.front() < 0 || kept.back() >= n) {
        throw InvalidArgument("partial_trace: keep must be a nonempty strict subset of the qubits");
    }
    std::vector<int> traced;
    for (int q = 0; q < n; ++q) {
        if (!std::binary_search(kept.begin(), kept.end(), q)) {
            traced.push_back(q);
        }
    }
    // Move kept qubits to the front; then the reduced state is a sum of
    // diagonal blocks over the traced index.
    std::vector<int> order = kept;
    order.insert(order.end(), traced.begin(), traced.end());
    ComplexMatrix p = permute_qubits(m.matrix(), order);
    const Eigen::Index dk = Eigen::Index{1} << kept.size();
    const Eigen::Index dt = Eigen::Index{1} << traced.size();
    ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
    for (Eigen::Index i = 0; i < dk; ++i) {
        for (Eigen::Index j = 0; j < dk; ++j) {
            Complex s = 0.0;
            for (Eigen::Index t = 0; t < dt; ++t) {
                s += p(i * dt + t, j * dt + t);
            }
            out(i, j) = s;
        }
    }
    return DensityMatrix(hermitian_part(out));
}

ComplexMatrix partial_transpose(const DensityMatrix &m, int subsystem) {
    if (m.qubits() != 2) {
        throw InvalidArgument("partial_transpose: expected a two-qubit state");
    }
    if (subsystem != 0 && subsystem != 1) {
        throw InvalidArgument("partial_transpose: subsystem must be 0 or 1");
    }
    const ComplexMatrix &a = m.matrix();
    ComplexMatrix out(4, 4);
    for (Eigen::Index i = 0; i < 4; ++i) {
        for (Eigen::Index j = 0; j < 4; ++j) {
            int i0 = bit_of(i, 0, 2), i1 = bit_of(i, 1, 2);
            int j0 = bit_of(j, 0, 2), j1 = bit_of(j, 1, 2);
            if (subsystem == 0) {
                std::swap(i0, j0);
            } else {
                std::swap(i1, j1);
            }
            out(i, j) = a(i0 * 2 + i1, j0 * 2 + j1);
        }
    }
    return out;
}

namespace {

void check_permutation(std::span<const int> order, int n) {
    if (static_cast<int>(order.size()) != n) {
        throw InvalidArgument("permute_qubits: order length mismatch");
    }
    std::vector<int> seen(order.begin(), order.end());
    std::sort(seen.begin(), seen.end());
    for (int q = 0; q < n; ++q) {
        if (seen[q] != q) {
            throw InvalidArgument("permute_qubits: order is not a permutation");
        }
    }
}

}  // namespace

ComplexVector permute_qubits(const ComplexVector &v, std::span<const int> order) {
    const int n = qubit_count_for_dimension(v.size());
    check_permutation(order, n);
    ComplexVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        Eigen::Index src = 0;
        for (int p = 0; p < n; ++p) {
            src |= static_cast<Eigen::Index>(bit_of(i, p, n)) << (n - 1 - order[p]);
        }
        out(i) = v(src);
    }
    return out;
}

ComplexMatrix permute_qubits(const ComplexMatrix &m, std::span<const int> order) {
    check_square(m, "permute_qubits");
    const int n = qubit_count_for_dimension(m.rows());
    check_permutation(order, n);
    std::vector<Eigen::Index> src(m.rows());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Eigen::Index s = 0;
        for (int p = 0; p < n; ++p) {
            s |= static_cast<Eigen::Index>(bit_of(i, p, n)) << (n - 1 - order[p]);
        }
        src[i] = s;
    }
    ComplexMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            out(i, j) = m(src[i], src[j]);
        }
    }
    return out;
}

ComplexMatrix matrix_sqrt(const ComplexMatrix &m) {
    check_square(m, "matrix_sqrt");
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if (hermiticity_defect(m) > kHermitianTolerance * scale) {
        throw NumericalDomainError("matrix_sqrt: matrix is not Hermitian");
    }
    HermitianSpectrum spec = hermitian_eigen(m);
    Eigen::VectorXd roots(spec.values.size());
    for (Eigen::Index k = 0; k < spec.values.size(); ++k) {
        double ev = spec.values(k);
        if (ev < -kClampTolerance * scale) {
            throw NumericalDomainError("matrix_sqrt: eigenvalue " + describe(ev) + " is significantly negative");
        }
        roots(k) = std::sqrt(std::max(ev, 0.0));
    }
    return spec.vectors * roots.asDiagonal() * spec.vectors.adjoint();
}

ChannelOutput embed_two_qubit_channel(
    const DensityMatrix &rho, const ChoiProcess &chi, std::array<int, 2> targets) {
    const int n = rho.qubits();
    if (n < 2) {
        throw InvalidArgument("embed_two_qubit_channel: need at least two qubits");
    }
    if (targets[0] == targets[1]) {
        throw InvalidArgument("embed_two_qubit_channel: repeated target qubit");
    }
    for (int t : targets) {
        if (t < 0 || t >= n) {
            throw InvalidArgument("embed_two_qubit_channel: target qubit out of range");
        }
    }
    std::vector<int> order{targets[0], targets[1]};
    for (int q = 0; q < n; ++q) {
        if (q != targets[0] && q != targets[1]) {
            order.push_back(q);
        }
    }
    std::vector<int> inverse(n);
    for (int p = 0; p < n; ++p) {
        inverse[order[p]] = p;
    }
    ComplexMatrix moved = permute_qubits(rho.matrix(), order);
    ComplexMatrix out = permute_qubits(choi_act_on_leading_pair(moved, chi.matrix()), inverse);
    double weight = out.trace().real();
    double probability = 4.0 * chi.success_scale() * weight;
    if (!(probability > kDegenerateThreshold)) {
        throw DegenerateOutcome("post-selection never succeeds for this input", 0.0);
    }
    return {DensityMatrix(hermitian_part(out) / weight), probability};
}

ChannelOutput apply_choi_channel(const DensityMatrix &rho_in, const ChoiProcess &chi) {
    if (rho_in.qubits() != 2) {
        throw InvalidArgument("apply_choi_channel: expected a two-qubit input");
    }
    return embed_two_qubit_channel(rho_in, chi, {0, 1});
}

ComplexVector apply_operator(const ComplexVector &state, const ComplexMatrix &op, std::span<const int> targets) {
    const int n = qubit_count_for_dimension(state.size());
    const int k = static_cast<int>(targets.size());
    if (op.rows() != (Eigen::Index{1} << k) || op.cols() != op.rows()) {
        throw InvalidArgument("apply_operator: operator size does not match target count");
    }
    std::vector<int> order(targets.begin(), targets.end());
    for (int q = 0; q < n; ++q) {
        if (std::find(targets.begin(), targets.end(), q) == targets.end()) {
            order.push_back(q);
        }
    }
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.front() < 0 || sorted.back() >= n) {
        throw InvalidArgument("apply_operator: invalid target list");
    }
    std::vector<int> inverse(n);
    for (int p = 0; p < n; ++p) {
        inverse[order[p]] = p;
    }
    ComplexVector moved = permute_qubits(state, order);
    const Eigen::Index rest = state.size() / op.rows();
    // moved viewed as (target index) x (rest index), row-major in target.
    Eigen::Map<Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> view(
        moved.data(), op.rows(), rest);
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> acted = op * view;
    ComplexVector flat = Eigen::Map<ComplexVector>(acted.data(), acted.size());
    return permute_qubits(flat, inverse);
}

NormalizedState normalize_state(const PureState &s) {
    double n2 = s.norm_squared();
    if (!(n2 > kDegenerateThreshold)) {
        throw DegenerateOutcome("normalize_state: vanishing norm", n2);
    }
    return {PureState(s.amplitudes() / std::sqrt(n2)), n2};
}

double state_overlap(const PureState &a, const PureState &b) {
    if (a.qubits() != b.qubits()) {
        throw InvalidArgument("state_overlap: qubit count mismatch");
    }
    return std::norm(a.amplitudes().dot(b.amplitudes()));
}

}  // namespace nlconv
