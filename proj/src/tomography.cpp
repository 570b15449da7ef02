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

#include "nlconv/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "nlconv/poisson.hpp"

namespace nlconv {

namespace {

constexpr std::array<PrepLabel, 6> kPrepLabels{PrepLabel::H, PrepLabel::V,   PrepLabel::Plus,
                                               PrepLabel::Minus, PrepLabel::R, PrepLabel::L};
constexpr std::array<BasisLabel, 3> kBasisLabels{BasisLabel::Z, BasisLabel::X, BasisLabel::Y};

ComplexVector basis_ket(BasisLabel basis, int bit) {
    static constexpr char kets[3][2] = {{'H', 'V'}, {'+', '-'}, {'R', 'L'}};
    return single_qubit_ket(kets[static_cast<int>(basis)][bit]);
}

// Tr_in[(rho^T (x) 1) chi] for a two-qubit input, unnormalized.
ComplexMatrix choi_output(const ComplexMatrix &chi, const ComplexMatrix &rho) {
    ComplexMatrix out = ComplexMatrix::Zero(4, 4);
    for (Eigen::Index ap = 0; ap < 4; ++ap) {
        for (Eigen::Index a = 0; a < 4; ++a) {
            Complex w = rho(ap, a);
            if (w != Complex(0.0)) {
                out += w * chi.block(ap * 4, a * 4, 4, 4);
            }
        }
    }
    return out;
}

int basis_index(const MeasurementSetting &m) {
    return static_cast<int>(m.bases[0]) * 3 + static_cast<int>(m.bases[1]);
}

int prep_index(const PreparationSetting &p) {
    return static_cast<int>(p.labels[0]) * 6 + static_cast<int>(p.labels[1]);
}

using Matrix4 = Eigen::Matrix4cd;
using Vector4 = Eigen::Vector4cd;

// One rank-1 effect per (setting, outcome) for the state problem.
struct Effect {
    Vector4 vector;
    Matrix4 projector;
    double frequency;
};

// Per-preparation view of the process likelihood: effects rho_k^T (x) |pi><pi|.
struct PrepGroup {
    Matrix4 rho;                                               // |s_k><s_k|
    std::vector<Vector4, Eigen::aligned_allocator<Vector4>> kets;  // outcome kets pi_j
    std::vector<Matrix4, Eigen::aligned_allocator<Matrix4>> projectors;
    std::vector<double> frequencies;
};

double safe_log(double x) { return std::log(std::max(x, std::numeric_limits<double>::min())); }

template <class Model>
ReconstructionReport<ComplexMatrix> run_rrr(const Model &model, Eigen::Index dim, const MleOptions &options) {
    if (options.max_iterations < 1 || !(options.tolerance >= 0.0)) {
        throw InvalidArgument("MLE options: max_iterations >= 1 and tolerance >= 0 required");
    }
    ComplexMatrix current = ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim);
    std::vector<double> probs = model.probabilities(current);
    double loglik = model.log_likelihood(probs);
    std::vector<double> history{loglik};
    bool converged = false;
    int iterations = 0;
    int diluted = 0;
    const ComplexMatrix identity = ComplexMatrix::Identity(dim, dim);

    auto step = [&](const ComplexMatrix &a) {
        ComplexMatrix next = hermitian_part(a * current * a.adjoint());
        return ComplexMatrix(next / next.trace().real());
    };

    while (iterations < options.max_iterations) {
        ComplexMatrix r = model.r_operator(probs);
        ComplexMatrix candidate = step(r);
        std::vector<double> cand_probs = model.probabilities(candidate);
        double cand_loglik = model.log_likelihood(cand_probs);
        if (cand_loglik < loglik) {
            // The undamped step lost likelihood; shrink toward the identity
            // map, (1 + eps R) chi (1 + eps R), which increases it for small eps.
            bool accepted = false;
            for (double eps = 1.0; eps > 1e-9; eps *= 0.5) {
                candidate = step(identity + eps * r);
                cand_probs = model.probabilities(candidate);
                cand_loglik = model.log_likelihood(cand_probs);
                if (cand_loglik >= loglik) {
                    accepted = true;
                    break;
                }
            }
            if (!accepted) {
                converged = true;
                break;
            }
            ++diluted;
        }
        ++iterations;
        double gain = cand_loglik - loglik;
        current = std::move(candidate);
        probs = std::move(cand_probs);
        loglik = cand_loglik;
        history.push_back(loglik);
        if (gain < options.tolerance) {
            converged = true;
            break;
        }
    }
    return {current, iterations, loglik, converged, std::move(history), diluted};
}

class StateModel {
   public:
    explicit StateModel(const CoincidenceDataset &data) {
        double total = static_cast<double>(data.total_counts());
        if (!(total > 0.0)) {
            throw InvalidArgument("state dataset has no counts");
        }
        for (const SettingRecord &rec : data.records) {
            for (int o = 0; o < 4; ++o) {
                if (rec.counts[o] > 0) {
                    Vector4 v = rec.basis.outcome_vector(o);
                    effects_.push_back({v, v * v.adjoint(), static_cast<double>(rec.counts[o]) / total});
                }
            }
        }
    }

    std::vector<double> probabilities(const ComplexMatrix &rho_dynamic) const {
        const Matrix4 rho = rho_dynamic;
        std::vector<double> p(effects_.size());
        for (std::size_t j = 0; j < effects_.size(); ++j) {
            p[j] = effects_[j].vector.dot(rho * effects_[j].vector).real();
        }
        return p;
    }

    // Sum of Pi_j is 9 * identity, so q_j = p_j / 9.
    double log_likelihood(const std::vector<double> &p) const {
        double l = 0.0;
        for (std::size_t j = 0; j < effects_.size(); ++j) {
            l += effects_[j].frequency * safe_log(p[j] / kBasisCount);
        }
        return l;
    }

    ComplexMatrix r_operator(const std::vector<double> &p) const {
        Matrix4 r = Matrix4::Zero();
        for (std::size_t j = 0; j < effects_.size(); ++j) {
            r += (effects_[j].frequency / std::max(p[j], std::numeric_limits<double>::min())) * effects_[j].projector;
        }
        return r;
    }

   private:
    std::vector<Effect, Eigen::aligned_allocator<Effect>> effects_;
};

class ProcessModel {
   public:
    explicit ProcessModel(const CoincidenceDataset &data) {
        double total = static_cast<double>(data.total_counts());
        if (!(total > 0.0)) {
            throw InvalidArgument("process dataset has no counts");
        }
        groups_.resize(kPreparationCount);
        std::vector<PreparationSetting> preps = all_preparations();
        for (int k = 0; k < kPreparationCount; ++k) {
            groups_[k].rho = preps[k].state().projector();
        }
        for (const SettingRecord &rec : data.records) {
            PrepGroup &g = groups_[prep_index(*rec.prep)];
            for (int o = 0; o < 4; ++o) {
                if (rec.counts[o] > 0) {
                    Vector4 v = rec.basis.outcome_vector(o);
                    g.kets.push_back(v);
                    g.projectors.push_back(v * v.adjoint());
                    g.frequencies.push_back(static_cast<double>(rec.counts[o]) / total);
                    ++effect_count_;
                }
            }
        }
    }

    std::vector<double> probabilities(const ComplexMatrix &chi) const {
        std::vector<double> p;
        p.reserve(effect_count_);
        for (const PrepGroup &g : groups_) {
            if (g.kets.empty()) {
                continue;
            }
            Matrix4 sigma = Matrix4::Zero();
            for (Eigen::Index ap = 0; ap < 4; ++ap) {
                for (Eigen::Index a = 0; a < 4; ++a) {
                    sigma += g.rho(ap, a) * chi.block<4, 4>(ap * 4, a * 4);
                }
            }
            for (const Vector4 &ket : g.kets) {
                p.push_back(ket.dot(sigma * ket).real());
            }
        }
        return p;
    }

    // Sum over all effects is 81 * identity, so q_j = p_j / 81.
    double log_likelihood(const std::vector<double> &p) const {
        double l = 0.0;
        std::size_t j = 0;
        for (const PrepGroup &g : groups_) {
            for (double f : g.frequencies) {
                l += f * safe_log(p[j++] / (kPreparationCount * kBasisCount / 4.0));
            }
        }
        return l;
    }

    ComplexMatrix r_operator(const std::vector<double> &p) const {
        // R = sum_k rho_k^T (x) M_k, M_k = sum_j (f_j / p_j) |pi_j><pi_j|.
        ComplexMatrix r = ComplexMatrix::Zero(16, 16);
        std::size_t j = 0;
        for (const PrepGroup &g : groups_) {
            if (g.kets.empty()) {
                continue;
            }
            Matrix4 m = Matrix4::Zero();
            for (std::size_t i = 0; i < g.kets.size(); ++i, ++j) {
                m += (g.frequencies[i] / std::max(p[j], std::numeric_limits<double>::min())) * g.projectors[i];
            }
            for (Eigen::Index a = 0; a < 4; ++a) {
                for (Eigen::Index ap = 0; ap < 4; ++ap) {
                    r.block<4, 4>(a * 4, ap * 4) += g.rho(ap, a) * m;
                }
            }
        }
        return r;
    }

   private:
    std::vector<PrepGroup> groups_;
    std::size_t effect_count_ = 0;
};

}  // namespace

char prep_label_char(PrepLabel label) {
    static constexpr char chars[] = {'H', 'V', '+', '-', 'R', 'L'};
    return chars[static_cast<int>(label)];
}

PrepLabel parse_prep_label(std::string_view label) {
    if (label.size() == 1) {
        for (PrepLabel l : kPrepLabels) {
            if (prep_label_char(l) == label[0]) {
                return l;
            }
        }
    }
    throw InvalidArgument("unknown preparation label '" + std::string(label) + "'");
}

char basis_label_char(BasisLabel label) {
    static constexpr char chars[] = {'Z', 'X', 'Y'};
    return chars[static_cast<int>(label)];
}

BasisLabel parse_basis_label(std::string_view label) {
    if (label.size() == 1) {
        for (BasisLabel l : kBasisLabels) {
            if (basis_label_char(l) == label[0]) {
                return l;
            }
        }
    }
    throw InvalidArgument("unknown basis label '" + std::string(label) + "'");
}

PureState PreparationSetting::state() const {
    return PureState(tensor_product(single_qubit_ket(prep_label_char(labels[0])),
                                    single_qubit_ket(prep_label_char(labels[1]))));
}

std::string PreparationSetting::str() const { return {prep_label_char(labels[0]), prep_label_char(labels[1])}; }

ComplexVector MeasurementSetting::outcome_vector(int outcome) const {
    if (outcome < 0 || outcome > 3) {
        throw InvalidArgument("outcome index must be in 0..3");
    }
    return tensor_product(basis_ket(bases[0], outcome >> 1), basis_ket(bases[1], outcome & 1));
}

ComplexMatrix MeasurementSetting::projector(int outcome) const {
    ComplexVector v = outcome_vector(outcome);
    return v * v.adjoint();
}

std::string MeasurementSetting::str() const { return {basis_label_char(bases[0]), basis_label_char(bases[1])}; }

std::vector<PreparationSetting> all_preparations() {
    std::vector<PreparationSetting> out;
    for (PrepLabel a : kPrepLabels) {
        for (PrepLabel b : kPrepLabels) {
            out.push_back({{a, b}});
        }
    }
    return out;
}

std::vector<MeasurementSetting> all_bases() {
    std::vector<MeasurementSetting> out;
    for (BasisLabel a : kBasisLabels) {
        for (BasisLabel b : kBasisLabels) {
            out.push_back({{a, b}});
        }
    }
    return out;
}

std::vector<SettingPair> enumerate_settings() {
    std::vector<SettingPair> out;
    out.reserve(kSettingCount);
    for (const PreparationSetting &p : all_preparations()) {
        for (const MeasurementSetting &m : all_bases()) {
            out.push_back({p, m});
        }
    }
    return out;
}

double success_probability(const ChoiProcess &chi, const PreparationSetting &prep) {
    return 4.0 * chi.success_scale() * choi_output(chi.matrix(), prep.state().projector()).trace().real();
}

std::array<double, 4> outcome_probabilities(
    const ChoiProcess &chi, const PreparationSetting &prep, const MeasurementSetting &basis) {
    ComplexMatrix sigma = choi_output(chi.matrix(), prep.state().projector());
    double weight = sigma.trace().real();
    if (!(4.0 * chi.success_scale() * weight > kDegenerateThreshold)) {
        throw DegenerateOutcome("channel annihilates preparation " + prep.str(), 0.0);
    }
    std::array<double, 4> p{};
    for (int o = 0; o < 4; ++o) {
        ComplexVector v = basis.outcome_vector(o);
        p[o] = std::max(0.0, v.dot(sigma * v).real() / weight);
    }
    return p;
}

std::array<double, 4> outcome_probabilities(const DensityMatrix &rho, const MeasurementSetting &basis) {
    if (rho.qubits() != 2) {
        throw InvalidArgument("outcome_probabilities: expected a two-qubit state");
    }
    std::array<double, 4> p{};
    for (int o = 0; o < 4; ++o) {
        ComplexVector v = basis.outcome_vector(o);
        p[o] = std::max(0.0, v.dot(rho.matrix() * v).real());
    }
    return p;
}

std::int64_t CoincidenceDataset::total_counts() const {
    std::int64_t total = 0;
    for (const SettingRecord &r : records) {
        total += r.counts[0] + r.counts[1] + r.counts[2] + r.counts[3];
    }
    return total;
}

DatasetKind validate_dataset(const CoincidenceDataset &data) {
    if (!(data.mean_counts > 0.0) || !std::isfinite(data.mean_counts)) {
        throw InvalidArgument("dataset: mean_counts must be positive");
    }
    for (const SettingRecord &r : data.records) {
        for (std::int64_t c : r.counts) {
            if (c < 0) {
                throw InvalidArgument("dataset: negative count");
            }
        }
    }
    if (data.records.size() == static_cast<std::size_t>(kBasisCount)) {
        std::array<bool, kBasisCount> seen{};
        for (const SettingRecord &r : data.records) {
            if (r.prep != data.records.front().prep) {
                throw InvalidArgument("dataset: state tomography records must share one preparation");
            }
            int b = basis_index(r.basis);
            if (seen[b]) {
                throw InvalidArgument("dataset: duplicate basis " + r.basis.str());
            }
            seen[b] = true;
        }
        return DatasetKind::State;
    }
    if (data.records.size() == static_cast<std::size_t>(kSettingCount)) {
        std::vector<bool> seen(kSettingCount, false);
        for (const SettingRecord &r : data.records) {
            if (!r.prep) {
                throw InvalidArgument("dataset: process records need a preparation");
            }
            int idx = prep_index(*r.prep) * kBasisCount + basis_index(r.basis);
            if (seen[idx]) {
                throw InvalidArgument("dataset: duplicate setting " + r.prep->str() + "/" + r.basis.str());
            }
            seen[idx] = true;
        }
        return DatasetKind::Process;
    }
    throw InvalidArgument("dataset: expected 9 (state) or 324 (process) setting records, got " +
                          std::to_string(data.records.size()));
}

CoincidenceDataset simulate_counts(const ChoiProcess &chi, double mean_counts, std::uint64_t seed) {
    if (!(mean_counts > 0.0) || !std::isfinite(mean_counts)) {
        throw InvalidArgument("simulate_counts: mean_counts must be positive");
    }
    PoissonSampler sampler(derive_seed(seed, "simulate_counts"));
    CoincidenceDataset data;
    data.mean_counts = mean_counts;
    data.seed = seed;
    data.generator = std::string(PoissonSampler::kDescription);
    data.records.reserve(kSettingCount);
    for (const PreparationSetting &prep : all_preparations()) {
        ComplexMatrix sigma = choi_output(chi.matrix(), prep.state().projector());
        double weight = sigma.trace().real();
        double success = 4.0 * chi.success_scale() * weight;
        for (const MeasurementSetting &basis : all_bases()) {
            SettingRecord rec{prep, basis, {0, 0, 0, 0}};
            if (success > kDegenerateThreshold) {
                for (int o = 0; o < 4; ++o) {
                    ComplexVector v = basis.outcome_vector(o);
                    double p = std::max(0.0, v.dot(sigma * v).real() / weight);
                    rec.counts[o] = sampler(mean_counts * success * p);
                }
            }
            data.records.push_back(rec);
        }
    }
    return data;
}

CoincidenceDataset simulate_state_counts(const DensityMatrix &rho, double mean_counts, std::uint64_t seed,
                                         double success_probability, std::optional<PreparationSetting> prep) {
    if (!(mean_counts > 0.0) || !std::isfinite(mean_counts)) {
        throw InvalidArgument("simulate_state_counts: mean_counts must be positive");
    }
    if (!(success_probability >= 0.0 && success_probability <= 1.0)) {
        throw InvalidArgument("simulate_state_counts: success probability must lie in [0, 1]");
    }
    PoissonSampler sampler(derive_seed(seed, "simulate_state_counts"));
    CoincidenceDataset data;
    data.mean_counts = mean_counts;
    data.seed = seed;
    data.generator = std::string(PoissonSampler::kDescription);
    for (const MeasurementSetting &basis : all_bases()) {
        std::array<double, 4> p = outcome_probabilities(rho, basis);
        SettingRecord rec{prep, basis, {0, 0, 0, 0}};
        for (int o = 0; o < 4; ++o) {
            rec.counts[o] = sampler(mean_counts * success_probability * p[o]);
        }
        data.records.push_back(rec);
    }
    return data;
}

CoincidenceDataset resample_counts(const CoincidenceDataset &data, std::uint64_t seed) {
    PoissonSampler sampler(seed);
    CoincidenceDataset out = data;
    out.seed = seed;
    out.generator = std::string(PoissonSampler::kDescription);
    for (SettingRecord &r : out.records) {
        for (std::int64_t &c : r.counts) {
            c = sampler(static_cast<double>(c));
        }
    }
    return out;
}

ReconstructionReport<DensityMatrix> mle_density_matrix(const CoincidenceDataset &data, const MleOptions &options) {
    if (validate_dataset(data) != DatasetKind::State) {
        throw InvalidArgument("mle_density_matrix: expected a single-preparation dataset");
    }
    StateModel model(data);
    auto raw = run_rrr(model, 4, options);
    return {DensityMatrix(raw.estimate), raw.iterations, raw.final_log_likelihood, raw.converged,
            std::move(raw.log_likelihood), raw.diluted_steps};
}

ReconstructionReport<ChoiProcess> mle_process_matrix(const CoincidenceDataset &data, const MleOptions &options) {
    if (validate_dataset(data) != DatasetKind::Process) {
        throw InvalidArgument("mle_process_matrix: expected the full 324-setting dataset");
    }
    ProcessModel model(data);
    auto raw = run_rrr(model, 16, options);
    double scale = static_cast<double>(data.total_counts()) / (kSettingCount * data.mean_counts);
    return {ChoiProcess(raw.estimate, scale), raw.iterations, raw.final_log_likelihood, raw.converged,
            std::move(raw.log_likelihood), raw.diluted_steps};
}

double estimated_success_probability(const CoincidenceDataset &data) {
    if (validate_dataset(data) != DatasetKind::State) {
        throw InvalidArgument("estimated_success_probability: expected a state dataset");
    }
    return static_cast<double>(data.total_counts()) / (kBasisCount * data.mean_counts);
}

Estimate reconstruct(const CoincidenceDataset &data, const MleOptions &options) {
    if (validate_dataset(data) == DatasetKind::State) {
        return mle_density_matrix(data, options).estimate;
    }
    return mle_process_matrix(data, options).estimate;
}

std::vector<std::vector<double>> bootstrap_samples(const CoincidenceDataset &data, int samples, std::uint64_t seed,
                                                   Execution execution, const SampleEvaluator &evaluate) {
    if (samples < 2) {
        throw InvalidArgument("Monte Carlo: need at least 2 samples");
    }
    validate_dataset(data);
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(samples));
    kernels::for_each(
        rows.size(),
        [&](std::size_t i) { rows[i] = evaluate(resample_counts(data, derive_seed(seed, static_cast<std::uint64_t>(i)))); },
        execution);
    return rows;
}

SampleStats sample_stats(std::span<const double> values) {
    if (values.size() < 2) {
        throw InvalidArgument("sample_stats: need at least 2 values");
    }
    double mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values) {
        ss += (v - mean) * (v - mean);
    }
    return {mean, std::sqrt(ss / static_cast<double>(values.size() - 1))};
}

std::vector<MonteCarloSummary> monte_carlo_metrics(
    const CoincidenceDataset &data, std::span<const MetricSpec> metrics, const MonteCarloOptions &options) {
    if (metrics.empty()) {
        throw InvalidArgument("monte_carlo_metrics: no metrics requested");
    }
    auto rows = bootstrap_samples(data, options.samples, options.seed, options.execution,
                                  [&](const CoincidenceDataset &sample) {
                                      Estimate estimate = reconstruct(sample, options.mle);
                                      std::vector<double> v;
                                      v.reserve(metrics.size());
                                      for (const MetricSpec &spec : metrics) {
                                          v.push_back(evaluate_metric(spec, estimate));
                                      }
                                      return v;
                                  });
    std::vector<MonteCarloSummary> out;
    for (std::size_t k = 0; k < metrics.size(); ++k) {
        MonteCarloSummary s{metrics[k].name, 0.0, 0.0, {}};
        s.samples.reserve(rows.size());
        for (const auto &row : rows) {
            s.samples.push_back(row[k]);
        }
        SampleStats st = sample_stats(s.samples);
        s.mean = st.mean;
        s.std = st.std;
        out.push_back(std::move(s));
    }
    return out;
}

MonteCarloSummary monte_carlo_metrics(
    const CoincidenceDataset &data, int n_samples, const MetricSpec &metric, std::uint64_t seed) {
    MonteCarloOptions options;
    options.samples = n_samples;
    options.seed = seed;
    return monte_carlo_metrics(data, std::span<const MetricSpec>(&metric, 1), options).front();
}

}  // namespace nlconv
