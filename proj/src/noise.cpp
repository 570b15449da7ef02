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

#include "nlconv/noise.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace nlconv {

namespace {

void check_probability(double p, const char *where) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InvalidArgument(std::string(where) + ": probability must lie in [0, 1]");
    }
}

// Z on one qubit of an n-qubit register as a diagonal sign vector.
Eigen::VectorXd z_signs(int qubit, int n) {
    Eigen::VectorXd s(Eigen::Index{1} << n);
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        s(i) = ((i >> (n - 1 - qubit)) & 1) ? -1.0 : 1.0;
    }
    return s;
}

ComplexMatrix conjugate_by_signs(const ComplexMatrix &m, const Eigen::VectorXd &signs) {
    return signs.asDiagonal() * m * signs.asDiagonal();
}

ComplexMatrix phase_state(const ComplexMatrix &rho, int n, const PhaseCorrection &phases) {
    ComplexVector d(rho.rows());
    for (Eigen::Index i = 0; i < rho.rows(); ++i) {
        double angle = 0.0;
        for (int q = 0; q < std::min(n, 4); ++q) {
            if ((i >> (n - 1 - q)) & 1) {
                angle += phases[q];
            }
        }
        d(i) = std::polar(1.0, angle);
    }
    return d.asDiagonal() * rho * d.conjugate().asDiagonal();
}

}  // namespace

NoiseSpec NoiseSpec::scaled(double magnitude) const {
    NoiseSpec out;
    out.depolarizing_p = depolarizing_p * magnitude;
    out.dephasing_p = dephasing_p * magnitude;
    if (mode_phases) {
        const auto &ph = mode_phases->phases();
        // Phases are stored in [0, 2pi); scale their signed representative.
        std::array<double, 4> s{};
        for (int k = 0; k < 4; ++k) {
            double signed_phase = ph[k] > std::numbers::pi ? ph[k] - 2.0 * std::numbers::pi : ph[k];
            s[k] = signed_phase * magnitude;
        }
        out.mode_phases = PhaseCorrection(s);
    }
    return out;
}

void NoiseSpec::validate() const {
    check_probability(depolarizing_p, "NoiseSpec.depolarizing_p");
    check_probability(dephasing_p, "NoiseSpec.dephasing_p");
}

ChoiProcess white_noise_choi() {
    return ChoiProcess(ComplexMatrix::Identity(16, 16) / 16.0, 1.0);
}

ChoiProcess depolarize_choi(const ChoiProcess &chi, double p) {
    check_probability(p, "depolarize_choi");
    return ChoiProcess((1.0 - p) * chi.matrix() + p * white_noise_choi().matrix(), chi.success_scale());
}

ChoiProcess dephase_choi_outputs(const ChoiProcess &chi, double p) {
    check_probability(p, "dephase_choi_outputs");
    ComplexMatrix m = chi.matrix();
    for (int out_qubit : {2, 3}) {
        m = (1.0 - p) * m + p * conjugate_by_signs(m, z_signs(out_qubit, 4));
    }
    return ChoiProcess(hermitian_part(m), chi.success_scale());
}

ChoiProcess apply_mode_phases(const ChoiProcess &chi, const PhaseCorrection &phases) {
    return ChoiProcess(conjugate_by_phases(chi.matrix(), phases), chi.success_scale());
}

ChoiProcess apply_noise(const ChoiProcess &chi, const NoiseSpec &noise) {
    noise.validate();
    ChoiProcess out = chi;
    if (noise.mode_phases) {
        out = apply_mode_phases(out, *noise.mode_phases);
    }
    if (noise.dephasing_p > 0.0) {
        out = dephase_choi_outputs(out, noise.dephasing_p);
    }
    if (noise.depolarizing_p > 0.0) {
        out = depolarize_choi(out, noise.depolarizing_p);
    }
    return out;
}

DensityMatrix dephase_state(const DensityMatrix &rho, double p, int qubit) {
    check_probability(p, "dephase_state");
    if (qubit < 0 || qubit >= rho.qubits()) {
        throw InvalidArgument("dephase_state: qubit out of range");
    }
    const ComplexMatrix &m = rho.matrix();
    return DensityMatrix(hermitian_part((1.0 - p) * m + p * conjugate_by_signs(m, z_signs(qubit, rho.qubits()))));
}

DensityMatrix depolarize_state(const DensityMatrix &rho, double p) {
    check_probability(p, "depolarize_state");
    const Eigen::Index d = rho.dimension();
    return DensityMatrix((1.0 - p) * rho.matrix() + p * ComplexMatrix::Identity(d, d) / static_cast<double>(d));
}

DensityMatrix apply_noise(const DensityMatrix &rho, const NoiseSpec &noise) {
    noise.validate();
    DensityMatrix out = rho;
    if (noise.mode_phases) {
        out = DensityMatrix(hermitian_part(phase_state(out.matrix(), out.qubits(), *noise.mode_phases)));
    }
    if (noise.dephasing_p > 0.0) {
        for (int q = 0; q < out.qubits(); ++q) {
            out = dephase_state(out, noise.dephasing_p, q);
        }
    }
    if (noise.depolarizing_p > 0.0) {
        out = depolarize_state(out, noise.depolarizing_p);
    }
    return out;
}

CalibrationResult calibrate_magnitude(double target, const NoiseSpec &template_spec,
                                      const std::function<double(const NoiseSpec &)> &fidelity_at,
                                      double tolerance) {
    if (!(target > 0.5 && target <= 1.0)) {
        throw InvalidArgument("calibration target must lie in (0.5, 1]");
    }
    template_spec.validate();
    double largest = std::max(template_spec.depolarizing_p, template_spec.dephasing_p);
    if (!(largest > 0.0) && !template_spec.mode_phases) {
        throw InvalidArgument("calibration template has no noise");
    }
    double max_magnitude = largest > 0.0 ? 1.0 / largest : 1.0;

    auto f = [&](double m) { return fidelity_at(template_spec.scaled(m)); };
    double f0 = f(0.0);
    if (std::abs(f0 - target) <= tolerance || target >= f0) {
        if (std::abs(f0 - target) > 1e-4) {
            throw NoSolution("calibration target exceeds the noiseless fidelity");
        }
        return {template_spec.scaled(0.0), 0.0, f0};
    }
    // Scan for the first magnitude whose fidelity drops to the target.
    constexpr int kScan = 64;
    double lo = 0.0, hi = -1.0;
    for (int k = 1; k <= kScan; ++k) {
        double m = max_magnitude * k / kScan;
        if (f(m) <= target) {
            hi = m;
            break;
        }
        lo = m;
    }
    if (hi < 0.0) {
        throw NoSolution("calibration target is below the fidelity reachable by this template");
    }
    double f_mid = f(hi);
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        double mid = 0.5 * (lo + hi);
        f_mid = f(mid);
        if (std::abs(f_mid - target) <= tolerance) {
            lo = hi = mid;
            break;
        }
        if (f_mid > target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    double m = 0.5 * (lo + hi);
    NoiseSpec spec = template_spec.scaled(m);
    return {spec, m, fidelity_at(spec)};
}

CalibrationResult calibrate_noise_to_fidelity(double target_raw_fidelity, const ChoiProcess &chi_th,
                                              const NoiseSpec &template_spec) {
    return calibrate_magnitude(target_raw_fidelity, template_spec, [&](const NoiseSpec &spec) {
        return process_fidelity(apply_noise(chi_th, spec), chi_th);
    });
}

CalibrationResult calibrate_state_noise_to_fidelity(double target_fidelity, const DensityMatrix &ideal,
                                                    const NoiseSpec &template_spec) {
    return calibrate_magnitude(target_fidelity, template_spec,
                               [&](const NoiseSpec &spec) { return fidelity(apply_noise(ideal, spec), ideal); });
}

}  // namespace nlconv
