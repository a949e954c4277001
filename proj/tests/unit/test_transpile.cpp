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

#include <random>

#include "oracles.hpp"
#include "zpqe/circuit/compile.hpp"
#include "zpqe/circuit/folding.hpp"

using namespace zpqe;

namespace {

bool in_basis(const Circuit& c) {
    const GateSet basis = default_basis();
    for (const auto& g : c.gates()) {
        if (!basis.contains(g.kind)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("Each gate transpiles to an equivalent basis sequence", "[transpile]") {
    const std::vector<double> angles = {0.0, 0.3, -1.7, std::numbers::pi / 2, -std::numbers::pi / 2, 3.0};
    for (double a : angles) {
        for (const Gate& g : {Gate::x(0), Gate::sx(0), Gate::sxdg(0), Gate::h(0), Gate::rz(0, a), Gate::rx(0, a),
                              Gate::ry(0, a)}) {
            Circuit c(1);
            c.append(g);
            const Circuit t = transpile(c);
            INFO(g.str());
            REQUIRE(in_basis(t));
            REQUIRE(oracle::phase_distance(t.unitary(), c.unitary()) < 1e-12);
        }
    }
}

TEST_CASE("Transpiled ansatz preserves the unitary up to phase", "[transpile][property]") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const auto ref = ReferenceState::aufbau(4, 2);
    const DuccAnsatz ansatz(generate_ducc_sd_pool(ref, 4), ref);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> theta = {u(rng), u(rng), u(rng)};
        const Circuit c = ansatz.superposition_circuit(theta, trial % 3);
        const Circuit t = transpile(c);
        REQUIRE(in_basis(t));
        REQUIRE(oracle::phase_distance(t.unitary(), c.unitary()) < 1e-10);
    }
}

TEST_CASE("Transpile rejects incomplete bases", "[transpile]") {
    Circuit c(1);
    c.append(Gate::h(0));
    REQUIRE_THROWS_AS(transpile(c, GateSet{GateKind::CX, GateKind::RZ, GateKind::SX}), std::invalid_argument);
}

TEST_CASE("Fold modes parse by name", "[transpile]") {
    for (FoldMode m : {FoldMode::Global, FoldMode::LocalAll, FoldMode::LocalLeft, FoldMode::LocalRight,
                       FoldMode::LocalRandom}) {
        REQUIRE(parse_fold_mode(fold_mode_name(m)) == m);
    }
    REQUIRE_THROWS_AS(parse_fold_mode("sideways"), std::invalid_argument);
}
