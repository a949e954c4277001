// Copyright 2026 The zne-pqe Authors
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

#include <catch_amalgamated.hpp>

#include "zpqe/circuit/compile.hpp"
#include "zpqe/common/stats.hpp"
#include "zpqe/operator/hamiltonian_io.hpp"
#include "zpqe/zne/zne.hpp"

using namespace zpqe;

namespace {

struct EnergyTermFixture {
    MolecularHamiltonian h = load_hamiltonian(std::string(ZPQE_DATA_DIR) + "/h2_2.25.ham");
    Circuit circuit;
    double exact = 0.0;

    EnergyTermFixture() {
        const DuccAnsatz ansatz(generate_ducc_sd_pool(h.reference, 4), h.reference);
        const std::vector<double> theta = {0.1, 0.1, 0.1};
        circuit = transpile(ansatz.circuit(theta));
        exact = measure_at_scale(circuit, h.hamiltonian, NoiseModel::ideal(), 1.0, FoldMode::LocalAll, {0, 1}, 0).value;
    }
};

}  // namespace

TEST_CASE("Schedules are validated", "[zne]") {
    ZneConfig cfg;
    REQUIRE_NOTHROW(cfg.validate());
    cfg.schedule = {2, 3};
    REQUIRE_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.schedule = {1, 3, 2};
    REQUIRE_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.schedule = {1, 2, 3};
    cfg.model = ExtrapolationModel::AdaptiveExponential;
    REQUIRE_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.asymptote = -0.8;
    REQUIRE_NOTHROW(cfg.validate());
}

TEST_CASE("Without noise every model returns the ideal value", "[zne]") {
    const EnergyTermFixture t;
    for (FoldMode mode : {FoldMode::LocalRandom, FoldMode::Global}) {
        ZneConfig cfg;
        cfg.fold_mode = mode;
        const FitResult r = zne_expectation(t.circuit, t.h.hamiltonian, cfg, NoiseModel::ideal(), {0, 1}, 3);
        REQUIRE(std::abs(r.zero_noise_value - t.exact) < 1e-10);
        REQUIRE(r.points.size() == 3);
        cfg.model = ExtrapolationModel::Linear;
        REQUIRE(std::abs(zne_expectation(t.circuit, t.h.hamiltonian, cfg, NoiseModel::ideal(), {0, 1}, 3)
                             .zero_noise_value -
                         t.exact) < 1e-10);
    }
}

TEST_CASE("Richardson reduces the energy-term bias in exact mode", "[zne]") {
    const EnergyTermFixture t;
    const NoiseModel noise = NoiseModel::nisq_light();
    const FitResult r = zne_expectation(t.circuit, t.h.hamiltonian, ZneConfig{}, noise, {0, 1}, 0);
    const double d1 = r.points.front().value;
    REQUIRE(std::abs(r.zero_noise_value - t.exact) < std::abs(d1 - t.exact));
    for (std::size_t k = 0; k < 3; ++k) REQUIRE(std::abs(r.points[k].lambda - (k + 1.0)) < 0.01);
}

TEST_CASE("More Richardson nodes widen the spread", "[zne][property]") {
    const EnergyTermFixture t;
    const NoiseModel noise = NoiseModel::nisq_light();
    ZneConfig three, five;
    five.schedule = {1, 2, 3, 4, 5};
    std::vector<double> v3, v5;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        v3.push_back(zne_expectation(t.circuit, t.h.hamiltonian, three, noise, {8192, 1}, seed).zero_noise_value);
        v5.push_back(zne_expectation(t.circuit, t.h.hamiltonian, five, noise, {8192, 1}, seed).zero_noise_value);
    }
    REQUIRE(mean_std(v5).std > mean_std(v3).std);
}

TEST_CASE("Adaptive driver runs on the energy-term circuit", "[zne]") {
    const EnergyTermFixture t;
    ZneConfig cfg;
    cfg.model = ExtrapolationModel::AdaptiveExponential;
    cfg.asymptote = -0.8;
    const FitResult r = zne_expectation(t.circuit, t.h.hamiltonian, cfg, NoiseModel::nisq_light(), {8192, 5}, 9);
    REQUIRE(std::isfinite(r.zero_noise_value));
    REQUIRE(r.points.size() >= 2);
    REQUIRE(r.points.front().requested_lambda == 1.0);
}
