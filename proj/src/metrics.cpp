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

#include "nlconv/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <numbers>

namespace nlconv {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kGoldenRatio = 0.6180339887498949;

double wrap_phase(double phi) {
    double t = std::fmod(phi, kTwoPi);
    if (t < 0.0) {
        t += kTwoPi;
    }
    if (t >= kTwoPi) {
        t = 0.0;
    }
    return t;
}

// Golden-section search for the maximum of f on [lo, hi].
std::pair<double, double> golden_section_maximize(const std::function<double(double)> &f, double lo, double hi,
                                                  double resolution, long &evaluations) {
    double a = lo, b = hi;
    double c = b - kGoldenRatio * (b - a);
    double d = a + kGoldenRatio * (b - a);
    double fc = f(c), fd = f(d);
    evaluations += 2;
    while (b - a > resolution) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kGoldenRatio * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kGoldenRatio * (b - a);
            fd = f(d);
        }
        ++evaluations;
    }
    return fc >= fd ? std::make_pair(c, fc) : std::make_pair(d, fd);
}

// Fidelity of D chi D^dagger against a pure target |psi><psi| written as a
// trigonometric polynomial in the four phases:
//   F = Re sum_k C_k exp(i k . phi),  k in {-1,0,1}^4.
class PhaseFourierModel {
   public:
    PhaseFourierModel(const ComplexMatrix &chi, const ComplexVector &psi) {
        std::array<Complex, 81> coeffs{};
        for (Eigen::Index a = 0; a < 16; ++a) {
            for (Eigen::Index b = 0; b < 16; ++b) {
                int slot = 0;
                for (int q = 0; q < 4; ++q) {
                    int shift = static_cast<int>((a >> (3 - q)) & 1) - static_cast<int>((b >> (3 - q)) & 1);
                    slot = slot * 3 + (shift + 1);
                }
                coeffs[slot] += std::conj(psi(a)) * chi(a, b) * psi(b);
            }
        }
        for (int slot = 0; slot < 81; ++slot) {
            if (std::abs(coeffs[slot]) == 0.0) {
                continue;
            }
            std::array<int, 4> shift{};
            int rest = slot;
            for (int q = 3; q >= 0; --q) {
                shift[q] = rest % 3 - 1;
                rest /= 3;
            }
            terms_.push_back({shift, coeffs[slot]});
        }
    }

    double operator()(const std::array<double, 4> &phi) const {
        double total = 0.0;
        for (const Term &t : terms_) {
            double angle = t.shift[0] * phi[0] + t.shift[1] * phi[1] + t.shift[2] * phi[2] + t.shift[3] * phi[3];
            total += t.coeff.real() * std::cos(angle) - t.coeff.imag() * std::sin(angle);
        }
        return total;
    }

   private:
    struct Term {
        std::array<int, 4> shift;
        Complex coeff;
    };
    std::vector<Term> terms_;
};

// Eigenvalues of a 2x2 Hermitian matrix.
std::pair<double, double> eigenvalues_2x2(const Eigen::Matrix2cd &m) {
    double a = m(0, 0).real(), d = m(1, 1).real();
    double mean = 0.5 * (a + d);
    double radius = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(m(0, 1)));
    return {mean - radius, mean + radius};
}

double entropy_term(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

// sum_k p_k S(rho_u | k) for the projective measurement along (theta, phi)
// on the measured qubit. `blocks` holds rho viewed with the measured qubit
// as the leading factor: blocks[i][j] = <i|_m rho |j>_m (2x2 on the other qubit).
double conditional_entropy(const std::array<std::array<Eigen::Matrix2cd, 2>, 2> &blocks, double theta, double phi) {
    double total = 0.0;
    for (int sign : {+1, -1}) {
        // Bloch vector +-n; |e> = (cos t/2, e^{i phi} sin t/2) for +n.
        double t = sign > 0 ? theta : std::numbers::pi - theta;
        double f = sign > 0 ? phi : phi + std::numbers::pi;
        Complex e0(std::cos(0.5 * t), 0.0);
        Complex e1 = std::polar(std::sin(0.5 * t), f);
        // <e|_m rho |e>_m = sum_ij conj(e_i) e_j blocks[i][j]
        Eigen::Matrix2cd cond = std::norm(e0) * blocks[0][0] + std::conj(e0) * e1 * blocks[0][1] +
                                std::conj(e1) * e0 * blocks[1][0] + std::norm(e1) * blocks[1][1];
        double p = cond.trace().real();
        if (p <= 1e-15) {
            continue;
        }
        auto [l0, l1] = eigenvalues_2x2(cond / p);
        total += p * (entropy_term(l0) + entropy_term(l1));
    }
    return total;
}

}  // namespace

PhaseCorrection::PhaseCorrection(std::array<double, 4> phases) {
    for (std::size_t k = 0; k < 4; ++k) {
        if (!std::isfinite(phases[k])) {
            throw InvalidArgument("PhaseCorrection: phases must be finite");
        }
        phases_[k] = wrap_phase(phases[k]);
    }
}

ComplexMatrix PhaseCorrection::unitary() const {
    ComplexMatrix d = ComplexMatrix::Zero(16, 16);
    for (Eigen::Index a = 0; a < 16; ++a) {
        double angle = 0.0;
        for (int q = 0; q < 4; ++q) {
            if ((a >> (3 - q)) & 1) {
                angle += phases_[q];
            }
        }
        d(a, a) = std::polar(1.0, angle);
    }
    return d;
}

PhaseCorrection PhaseCorrection::inverse() const {
    return PhaseCorrection({-phases_[0], -phases_[1], -phases_[2], -phases_[3]});
}

ComplexMatrix conjugate_by_phases(const ComplexMatrix &chi, const PhaseCorrection &phases) {
    ComplexMatrix d = phases.unitary();
    return hermitian_part(d * chi * d.adjoint());
}

double purity(const DensityMatrix &m) { return (m.matrix() * m.matrix()).trace().real(); }

double purity(const ChoiProcess &chi) { return (chi.matrix() * chi.matrix()).trace().real(); }

namespace {

// Eigenvalues below this fraction of the largest are treated as exact zeros
// when taking square roots; their noise would otherwise enter as sqrt(noise).
constexpr double kSupportCutoff = 1e-12;

// W = V_r diag(sqrt(lambda_r)) over the numerical support, so W W^dagger = m.
ComplexMatrix support_root(const ComplexMatrix &m) {
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if (hermiticity_defect(m) > kHermitianTolerance * scale) {
        throw NumericalDomainError("fidelity: matrix is not Hermitian");
    }
    HermitianSpectrum spec = hermitian_eigen(m);
    const Eigen::Index n = spec.values.size();
    if (spec.values(0) < -kClampTolerance * scale) {
        throw NumericalDomainError("fidelity: matrix has a significantly negative eigenvalue");
    }
    const double cutoff = kSupportCutoff * std::max(spec.values(n - 1), 0.0);
    Eigen::Index first = 0;
    while (first < n && !(spec.values(first) > cutoff)) {
        ++first;
    }
    if (first == n) {
        throw NumericalDomainError("fidelity: zero matrix");
    }
    ComplexMatrix w = spec.vectors.rightCols(n - first);
    for (Eigen::Index k = 0; k < n - first; ++k) {
        w.col(k) *= std::sqrt(spec.values(first + k));
    }
    return w;
}

// W^dagger b W, which shares its nonzero spectrum with sqrt(m) b sqrt(m).
ComplexMatrix compress(const ComplexMatrix &w, const ComplexMatrix &b) {
    return hermitian_part(w.adjoint() * b * w);
}

double sqrt_trace(const ComplexMatrix &h) {
    HermitianSpectrum spec = hermitian_eigen(h);
    double trace = 0.0;
    for (Eigen::Index k = 0; k < spec.values.size(); ++k) {
        trace += std::sqrt(std::max(spec.values(k), 0.0));
    }
    return trace;
}

}  // namespace

double uhlmann_fidelity(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InvalidArgument("fidelity: dimension mismatch");
    }
    // Symmetric in a and b; compressing onto the smaller support keeps pure
    // inputs exact (F = <psi|b|psi>).
    ComplexMatrix wa = support_root(a);
    ComplexMatrix wb = support_root(b);
    double trace = sqrt_trace(wa.cols() <= wb.cols() ? compress(wa, b) : compress(wb, a));
    return trace * trace;
}

double fidelity(const DensityMatrix &a, const DensityMatrix &b) {
    if (a.dimension() != b.dimension()) {
        throw InvalidArgument("fidelity: dimension mismatch");
    }
    return uhlmann_fidelity(a.matrix(), b.matrix());
}

double process_fidelity(const ChoiProcess &chi, const ChoiProcess &chi_th) {
    return uhlmann_fidelity(chi_th.matrix(), chi.matrix());
}

PhaseOptimizationResult phase_optimized_fidelity(
    const ChoiProcess &chi, const ChoiProcess &chi_th, const PhaseOptimizationOptions &options) {
    if (options.grid_points < 1 || options.resolution <= 0.0 || options.max_sweeps < 0) {
        throw InvalidArgument("phase_optimized_fidelity: invalid options");
    }
    const double raw = process_fidelity(chi, chi_th);

    // Pure targets reduce to a cheap trigonometric polynomial; otherwise fall
    // back to the full Uhlmann formula per evaluation.
    std::function<double(const std::array<double, 4> &)> objective;
    HermitianSpectrum target_spec = hermitian_eigen(chi_th.matrix());
    const Eigen::Index top = target_spec.values.size() - 1;
    if (target_spec.values(top) >= 1.0 - 1e-10) {
        ComplexVector psi = target_spec.vectors.col(top);
        auto model = std::make_shared<PhaseFourierModel>(chi.matrix(), psi);
        objective = [model](const std::array<double, 4> &phi) { return (*model)(phi); };
    } else {
        ComplexMatrix root = support_root(chi_th.matrix());
        objective = [root, &chi](const std::array<double, 4> &phi) {
            double tr = sqrt_trace(compress(root, conjugate_by_phases(chi.matrix(), PhaseCorrection(phi))));
            return tr * tr;
        };
    }

    const int g = options.grid_points;
    const double step = kTwoPi / g;
    const std::size_t grid_size = static_cast<std::size_t>(g) * g * g * g;
    auto grid_point = [g, step](std::size_t index) {
        std::array<double, 4> phi{};
        for (int q = 3; q >= 0; --q) {
            phi[q] = step * static_cast<double>(index % g);
            index /= g;
        }
        return phi;
    };
    std::vector<double> values = kernels::evaluate(
        grid_size, [&](std::size_t i) { return objective(grid_point(i)); }, options.execution);
    std::size_t best_index = kernels::argmax_first(values);
    std::array<double, 4> best = grid_point(best_index);
    double best_value = values[best_index];
    long evaluations = static_cast<long>(grid_size);

    int sweeps = 0;
    for (; sweeps < options.max_sweeps; ++sweeps) {
        double before = best_value;
        for (int q = 0; q < 4; ++q) {
            std::array<double, 4> probe = best;
            auto along = [&](double t) {
                probe[q] = t;
                return objective(probe);
            };
            double half_width = 0.5 * std::numbers::pi;
            auto [t, value] =
                golden_section_maximize(along, best[q] - half_width, best[q] + half_width, options.resolution, evaluations);
            if (value > best_value) {
                best[q] = t;
                best_value = value;
            }
        }
        if (best_value - before <= 1e-15) {
            ++sweeps;
            break;
        }
    }

    // The optimum never reports less than the uncorrected fidelity.
    if (!(best_value >= raw)) {
        return {raw, raw, PhaseCorrection(), evaluations, sweeps};
    }
    return {std::min(best_value, 1.0 + 1e-12), raw, PhaseCorrection(best), evaluations, sweeps};
}

double concurrence(const DensityMatrix &m) {
    if (m.qubits() != 2) {
        throw InvalidArgument("concurrence: expected a two-qubit state");
    }
    ComplexMatrix yy = ComplexMatrix::Zero(4, 4);
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    ComplexMatrix flipped = yy * m.matrix().conjugate() * yy;
    // Eigenvalues of sqrt(rho) rho~ sqrt(rho), computed on the support of rho
    // so pure states give exactly one nonzero value.
    HermitianSpectrum spec = hermitian_eigen(compress(support_root(m.matrix()), flipped));
    std::array<double, 4> lambda{};
    for (Eigen::Index k = 0; k < spec.values.size(); ++k) {
        lambda[k] = std::sqrt(std::max(spec.values(k), 0.0));
    }
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    return std::clamp(lambda[0] - lambda[1] - lambda[2] - lambda[3], 0.0, 1.0);
}

double log_negativity(const DensityMatrix &m) {
    if (m.qubits() != 2) {
        throw InvalidArgument("log_negativity: expected a two-qubit state");
    }
    HermitianSpectrum spec = hermitian_eigen(hermitian_part(partial_transpose(m, 1)));
    double trace_norm = spec.values.cwiseAbs().sum();
    return std::max(0.0, std::log2(trace_norm));
}

double von_neumann_entropy(const ComplexMatrix &m) {
    HermitianSpectrum spec = hermitian_eigen(m);
    double s = 0.0;
    for (Eigen::Index k = 0; k < spec.values.size(); ++k) {
        s += entropy_term(spec.values(k));
    }
    return s;
}

DiscordResult discord_details(const DensityMatrix &m, int measured_qubit, const DiscordOptions &options) {
    if (m.qubits() != 2) {
        throw InvalidArgument("discord: expected a two-qubit state");
    }
    if (measured_qubit != 0 && measured_qubit != 1) {
        throw InvalidArgument("discord: measured qubit must be 0 or 1");
    }
    if (options.theta_points < 2 || options.phi_points < 1 || options.resolution <= 0.0) {
        throw InvalidArgument("discord: invalid grid options");
    }
    const int other = 1 - measured_qubit;
    const std::array<int, 2> order{measured_qubit, other};
    ComplexMatrix leading = permute_qubits(m.matrix(), order);
    std::array<std::array<Eigen::Matrix2cd, 2>, 2> blocks;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            blocks[i][j] = leading.block(2 * i, 2 * j, 2, 2);
        }
    }
    const std::array<int, 1> keep_measured{measured_qubit};
    const std::array<int, 1> keep_other{other};
    double s_measured = von_neumann_entropy(partial_trace(m, keep_measured).matrix());
    double s_other = von_neumann_entropy(partial_trace(m, keep_other).matrix());
    double s_joint = von_neumann_entropy(m.matrix());

    const double theta_step = std::numbers::pi / (options.theta_points - 1);
    const double phi_step = kTwoPi / options.phi_points;
    const std::size_t grid = static_cast<std::size_t>(options.theta_points) * options.phi_points;
    std::vector<double> negated = kernels::evaluate(
        grid,
        [&](std::size_t i) {
            double theta = theta_step * static_cast<double>(i / options.phi_points);
            double phi = phi_step * static_cast<double>(i % options.phi_points);
            return -conditional_entropy(blocks, theta, phi);
        },
        options.execution);
    std::size_t best = kernels::argmax_first(negated);
    double theta = theta_step * static_cast<double>(best / options.phi_points);
    double phi = phi_step * static_cast<double>(best % options.phi_points);
    double best_value = negated[best];

    long evaluations = 0;
    for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
        double before = best_value;
        auto [t, vt] = golden_section_maximize([&](double x) { return -conditional_entropy(blocks, x, phi); },
                                               theta - theta_step, theta + theta_step, options.resolution, evaluations);
        if (vt > best_value) {
            theta = t;
            best_value = vt;
        }
        auto [f, vf] = golden_section_maximize([&](double x) { return -conditional_entropy(blocks, theta, x); },
                                               phi - phi_step, phi + phi_step, options.resolution, evaluations);
        if (vf > best_value) {
            phi = f;
            best_value = vf;
        }
        if (best_value - before <= 1e-15) {
            break;
        }
    }
    double min_conditional = -best_value;
    double mutual = s_measured + s_other - s_joint;
    double classical = s_other - min_conditional;
    return {mutual - classical, mutual, classical, theta, wrap_phase(phi)};
}

double discord(const DensityMatrix &m, int measured_qubit, const DiscordOptions &options) {
    return discord_details(m, measured_qubit, options).discord;
}

MetricName parse_metric_name(std::string_view name) {
    if (name == "purity") return MetricName::Purity;
    if (name == "fidelity") return MetricName::Fidelity;
    if (name == "process-fidelity") return MetricName::ProcessFidelity;
    if (name == "process-fidelity-optimized") return MetricName::ProcessFidelityOptimized;
    if (name == "concurrence") return MetricName::Concurrence;
    if (name == "log-negativity") return MetricName::LogNegativity;
    if (name == "discord-q1") return MetricName::DiscordQ1;
    if (name == "discord-q2") return MetricName::DiscordQ2;
    if (name == "trace") return MetricName::Trace;
    if (name == "success-scale") return MetricName::SuccessScale;
    throw InvalidArgument("unknown metric '" + std::string(name) + "'");
}

std::string_view metric_name_string(MetricName name) {
    switch (name) {
        case MetricName::Purity:
            return "purity";
        case MetricName::Fidelity:
            return "fidelity";
        case MetricName::ProcessFidelity:
            return "process-fidelity";
        case MetricName::ProcessFidelityOptimized:
            return "process-fidelity-optimized";
        case MetricName::Concurrence:
            return "concurrence";
        case MetricName::LogNegativity:
            return "log-negativity";
        case MetricName::DiscordQ1:
            return "discord-q1";
        case MetricName::DiscordQ2:
            return "discord-q2";
        case MetricName::Trace:
            return "trace";
        case MetricName::SuccessScale:
            return "success-scale";
    }
    return "unknown";
}

double evaluate_metric(const MetricSpec &spec, const Estimate &estimate) {
    const auto *state = std::get_if<DensityMatrix>(&estimate);
    const auto *process = std::get_if<ChoiProcess>(&estimate);
    auto need_state = [&]() -> const DensityMatrix & {
        if (state == nullptr) {
            throw InvalidArgument(std::string(metric_name_string(spec.name)) + " needs a state estimate");
        }
        return *state;
    };
    auto need_process = [&]() -> const ChoiProcess & {
        if (process == nullptr) {
            throw InvalidArgument(std::string(metric_name_string(spec.name)) + " needs a process estimate");
        }
        return *process;
    };
    switch (spec.name) {
        case MetricName::Purity:
            return state ? purity(*state) : purity(*process);
        case MetricName::Trace:
            return state ? state->matrix().trace().real() : process->matrix().trace().real();
        case MetricName::SuccessScale:
            return need_process().success_scale();
        case MetricName::Fidelity: {
            const auto *target = std::get_if<DensityMatrix>(&spec.target);
            if (target == nullptr) {
                throw InvalidArgument("fidelity needs a target state");
            }
            return fidelity(need_state(), *target);
        }
        case MetricName::ProcessFidelity:
        case MetricName::ProcessFidelityOptimized: {
            const auto *target = std::get_if<ChoiProcess>(&spec.target);
            if (target == nullptr) {
                throw InvalidArgument(std::string(metric_name_string(spec.name)) + " needs a target process");
            }
            if (spec.name == MetricName::ProcessFidelity) {
                return process_fidelity(need_process(), *target);
            }
            return phase_optimized_fidelity(need_process(), *target).fidelity;
        }
        case MetricName::Concurrence:
            return concurrence(need_state());
        case MetricName::LogNegativity:
            return log_negativity(need_state());
        case MetricName::DiscordQ1:
            return discord(need_state(), 0);
        case MetricName::DiscordQ2:
            return discord(need_state(), 1);
    }
    throw InvalidArgument("unknown metric");
}

}  // namespace nlconv
