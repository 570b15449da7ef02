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

#include <gtest/gtest.h>

#include <cmath>
#include <iostream>
#include <string>

#include "nlconv/errors.hpp"
#include "nlconv/gate.hpp"
#include "nlconv/pipeline.hpp"

using namespace nlconv;

namespace {

std::string label(PresetName p, const std::string &suffix) {
    return std::string(preset_name_string(p)) + "/" + suffix;
}

ExperimentConfig small_config() {
    ExperimentConfig c;
    c.presets = {PresetName::Ghz};
    c.mean_counts = 2000;
    c.seed = 42;
    c.calibrate_noise = true;
    c.monte_carlo_samples = 3;
    return c;
}

}  // namespace

TEST(Table1, DeterministicAndExact) {
    TableReport a = run_table1(), b = run_table1();
    EXPECT_EQ(a.to_csv(), b.to_csv());
    for (const ReportRow &row : a.rows) {
        if (row.label.ends_with("/success-probability")) {
            std::string base = row.label.substr(0, row.label.size() - std::string("success-probability").size());
            EXPECT_NEAR(row.value, a.value(base + "expected-success-probability"), 1e-12) << row.label;
        }
        if (row.label.ends_with("/reference-fidelity")) {
            EXPECT_GE(row.value, 1.0 - 1e-10) << row.label;
        }
    }
    EXPECT_GE(a.value("cluster-identity/target-fidelity"), 1.0 - 1e-10);
    EXPECT_GE(a.value("ghz/target-fidelity"), 1.0 - 1e-10);
    EXPECT_GE(a.value("bell-pair/target-fidelity"), 1.0 - 1e-10);
    // The Dicke-angle output is a different state from the symmetric Dicke state.
    EXPECT_LT(a.value("dicke/target-fidelity"), 0.9);
    EXPECT_THROW(a.row("no-such-row"), InvalidArgument);
}

TEST(Config, ValidationRejectsBadValues) {
    ExperimentConfig c = small_config();
    c.mean_counts = 0;
    EXPECT_THROW(run_tomography_suite(c), InvalidArgument);
    c = small_config();
    c.monte_carlo_samples = 1;
    EXPECT_THROW(run_tomography_suite(c), InvalidArgument);
    c = small_config();
    c.presets.clear();
    EXPECT_THROW(run_tomography_suite(c), InvalidArgument);
    c = small_config();
    c.noise = NoiseSpec{2.0, 0.0, std::nullopt};
    EXPECT_THROW(run_tomography_suite(c), InvalidArgument);
}

TEST(Config, HashTracksContent) {
    ExperimentConfig a = small_config(), b = small_config();
    EXPECT_EQ(config_hash(a.to_json()), config_hash(b.to_json()));
    b.seed = 43;
    EXPECT_NE(config_hash(a.to_json()), config_hash(b.to_json()));
    EXPECT_EQ(config_hash(a.to_json()).size(), 16u);
    b = small_config();
    b.execution = Execution::Serial;
    EXPECT_EQ(config_hash(a.to_json()), config_hash(b.to_json()));
}

TEST(TomographySuite, DeterministicAndExecutionIndependent) {
    ExperimentConfig c = small_config();
    TableReport a = run_tomography_suite(c);
    TableReport b = run_tomography_suite(c);
    c.execution = Execution::Serial;
    TableReport s = run_tomography_suite(c);
    EXPECT_EQ(a.to_csv(), b.to_csv());
    EXPECT_EQ(a.to_csv(), s.to_csv());
    EXPECT_EQ(a.to_json().dump(), s.to_json().dump());
    const ReportRow &f = a.row(label(PresetName::Ghz, "fidelity-raw"));
    ASSERT_TRUE(f.std.has_value());
    EXPECT_EQ(f.n_samples, 3);
    EXPECT_TRUE(f.seed.has_value());
    EXPECT_NEAR(a.value(label(PresetName::Ghz, "channel-fidelity-raw")), 0.875, 1e-4);
    c.seed = 43;
    c.execution = Execution::Parallel;
    EXPECT_NE(run_tomography_suite(c).to_csv(), a.to_csv());
}

TEST(TomographySuite, NoiselessHighCountsRecoverTheGate) {
    ExperimentConfig c;
    c.mean_counts = 1e6;
    c.monte_carlo_samples = 2;
    c.seed = 5;
    TableReport r = run_tomography_suite(c);
    for (PresetName p : conversion_presets()) {
        EXPECT_GT(r.value(label(p, "fidelity-raw")), 0.999) << preset_name_string(p);
        EXPECT_GT(r.value(label(p, "purity")), 0.999) << preset_name_string(p);
        EXPECT_NEAR(r.value(label(p, "success-scale")), ideal_choi(preset(p).settings).success_scale(), 0.01);
    }
}

TEST(Entangler, CalibratedFidelityNearTarget) {
    ExperimentConfig c;
    c.calibrate_noise = true;
    c.mean_counts = 1e4;
    c.monte_carlo_samples = 4;
    c.seed = 3;
    TableReport r = run_entangler_demo(c);
    EXPECT_NEAR(r.value("entangler/success-probability-ideal"), 0.5, 1e-12);
    EXPECT_NEAR(r.value("entangler/concurrence-ideal"), 1.0, 1e-10);
    EXPECT_NEAR(r.value("entangler/psi-plus-fidelity-ideal"), 1.0, 1e-10);
    EXPECT_NEAR(r.value("entangler/state-fidelity"), 0.966, 1e-4);
    EXPECT_NEAR(r.value("entangler/fidelity"), 0.966, 0.02);
}

TEST(Entangler, NoiselessConcurrenceNearOne) {
    ExperimentConfig c;
    c.mean_counts = 1e5;
    c.monte_carlo_samples = 3;
    c.seed = 8;
    TableReport r = run_entangler_demo(c);
    EXPECT_GE(r.value("entangler/concurrence"), 0.99);
    EXPECT_GE(r.value("entangler/fidelity"), 0.999);
}

TEST(Discord, IdealValuesAndSampledSpread) {
    ExperimentConfig c;
    c.mean_counts = 1e5;
    c.monte_carlo_samples = 30;
    c.seed = 11;
    TableReport r = run_discord_demo(c);
    EXPECT_NEAR(r.value("discord/success-probability-ideal"), 7.0 / 16.0, 1e-12);
    EXPECT_NEAR(r.value("discord/log-negativity-ideal"), 0.0, 1e-10);
    EXPECT_NEAR(r.value("discord/concurrence-ideal"), 0.0, 1e-10);
    EXPECT_NEAR(r.value("discord/discord-q1-ideal"), 0.0, 1e-6);
    EXPECT_GT(r.value("discord/discord-q2-ideal"), 0.01);
    // Sampled entanglement measures are non-negative by construction, so their
    // bootstrap means sit slightly above zero; require them within three
    // standard deviations and report the one-sigma ratio.
    for (const char *name : {"discord/log-negativity", "discord/concurrence"}) {
        const ReportRow &row = r.row(name);
        ASSERT_TRUE(row.std.has_value());
        double ratio = row.value / *row.std;
        std::cout << name << " mean/std = " << ratio << "\n";
        EXPECT_LE(ratio, 3.0) << name;
    }
    EXPECT_GT(r.value("discord/discord-q2"), 0.01);
}

TEST(Table3, OrderingAndRealisticCluster) {
    ExperimentConfig c;
    c.calibrate_noise = true;
    TableReport r = run_table3(c);
    TableReport again = run_table3(c);
    EXPECT_EQ(r.to_csv(), again.to_csv());
    EXPECT_NEAR(r.value("cluster/realistic-fidelity"), 0.915, 1e-6);
    EXPECT_NEAR(r.value(label(PresetName::ClusterIdentity, "total-fidelity-ideal-channel")), 0.915, 1e-6);
    for (PresetName p : conversion_presets()) {
        double op = r.value(label(p, "operation-fidelity"));
        double total = r.value(label(p, "total-fidelity"));
        EXPECT_GE(op, total) << preset_name_string(p);
        EXPECT_LT(op, 1.0) << preset_name_string(p);
        EXPECT_GE(total, 0.80) << preset_name_string(p);
        EXPECT_LE(total, 0.95) << preset_name_string(p);
        EXPECT_NEAR(r.value(label(p, "ideal-fidelity")), 1.0, 1e-10);
    }
}
