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
#include "zpqe/common/stats.hpp"
#include "zpqe/sim/channels.hpp"
#include "zpqe/sim/simulator.hpp"

using namespace zpqe;

namespace {

Circuit bell_like() {
    Circuit c(2);
    c.append(Gate::sx(0));
    c.append(Gate::rz(0, 0.4));
    c.append(Gate::cx(0, 1));
    c.append(Gate::x(1));
    return c;
}

PauliSum observable() {
    PauliSum h(2);
    h.add(-0.3, PauliString::parse("II"));
    h.add(0.7, PauliString::parse("ZI"));
    h.add(0.2, PauliString::parse("ZZ"));
    h.add(-0.4, PauliString::parse("XX"));
    h.add(0.1, PauliString::parse("YX"));
    return h;
}

}  // namespace

TEST_CASE("Noiseless density simulation matches the statevector", "[simulator]") {
    const Circuit c = bell_like();
    const DensityMatrix rho = simulate(c, NoiseModel::ideal());
    const oracle::Vec psi = simulate_statevector(c);
    REQUIRE((rho.to_matrix() - psi * psi.adjoint()).norm() < 1e-13);
    REQUIRE(rho.expectation(observable()).real() ==
            Catch::Approx(observable().expectation(psi).real()).margin(1e-13));
}

TEST_CASE("Gate noise is unitary then depolarizing then relaxation", "[simulator]") {
    const NoiseModel m = NoiseModel::nisq_light();
    const Circuit c = bell_like();
    DensityMatrix expect(2);
    for (const auto& g : c.gates()) {
        if (g.arity() == 1) {
            expect.apply_unitary(g.qubits[0], g.matrix());
            const std::size_t q[] = {g.qubits[0]};
            apply_depolarizing(expect, q, m.p_depol_1q);
            apply_thermal_relaxation(expect, g.qubits[0], m.duration_us(g.kind), m.t1(0), m.t2(0));
        } else {
            expect.apply_unitary(g.qubits[0], g.qubits[1], g.matrix());
            apply_depolarizing(expect, g.qubits, m.p_depol_2q);
            for (std::size_t q : g.qubits) apply_thermal_relaxation(expect, q, m.duration_us(g.kind), m.t1(q), m.t2(q));
        }
    }
    const DensityMatrix got = simulate(c, m);
    REQUIRE((got.to_matrix() - expect.to_matrix()).norm() < 1e-14);
    REQUIRE(std::abs(got.trace() - 1.0) < 1e-13);
    REQUIRE(got.hermiticity_error() < 1e-14);
    REQUIRE(got.purity() < 1.0);
}

TEST_CASE("Noisy simulation rejects gates without a duration", "[simulator]") {
    Circuit c(1);
    c.append(Gate::h(0));
    REQUIRE_THROWS_AS(simulate(c, NoiseModel::nisq_light()), std::invalid_argument);
}

TEST_CASE("Register size is capped", "[simulator]") {
    REQUIRE_THROWS_AS(simulate(Circuit(13), NoiseModel::ideal()), std::length_error);
    REQUIRE_NOTHROW(simulate(Circuit(3), NoiseModel::ideal(), 3));
}

TEST_CASE("Readout confusion acts per qubit", "[simulator]") {
    NoiseModel m = NoiseModel::ideal();
    m.readout = {ReadoutConfusion{0.1, 0.2}, ReadoutConfusion{0.0, 0.5}};
    const std::vector<double> ideal = {0.0, 0.0, 0.0, 1.0};  // |11>
    const auto noisy = apply_readout_confusion(ideal, m);
    REQUIRE(noisy[3] == Catch::Approx(0.8 * 0.5));
    REQUIRE(noisy[2] == Catch::Approx(0.2 * 0.5));
    REQUIRE(noisy[1] == Catch::Approx(0.8 * 0.5));
    REQUIRE(noisy[0] == Catch::Approx(0.2 * 0.5));
}

TEST_CASE("Multinomial counts sum to the shot budget", "[simulator]") {
    Rng rng(1);
    const std::vector<double> probs = {0.1, 0.0, 0.6, 0.3};
    const auto out = sample_counts(probs, 100000, rng);
    std::size_t total = 0;
    for (const auto& [k, v] : out.counts) total += v;
    REQUIRE(total == 100000);
    REQUIRE(out.counts.count(1) == 0);
    REQUIRE(out.counts.at(2) / 1e5 == Catch::Approx(0.6).margin(0.01));
}

TEST_CASE("Shot estimates are unbiased with the expected spread", "[simulator][property]") {
    const NoiseModel m = NoiseModel::nisq_light();
    const DensityMatrix rho = simulate(bell_like(), m);
    const ObservableEstimator est(rho, observable(), m);
    const double exact = est.exact();
    Rng rng(77);
    std::vector<double> samples;
    for (int k = 0; k < 400; ++k) samples.push_back(est.sample(2000, rng));
    const MeanStd s = mean_std(samples);
    REQUIRE(std::abs(s.mean - exact) < 4 * s.std / std::sqrt(400.0));
    REQUIRE(s.std > 0.0);
    REQUIRE(est.sample(0, rng) == exact);
}

TEST_CASE("Readout error shrinks Z expectations", "[simulator]") {
    NoiseModel m = NoiseModel::ideal();
    m.readout = {ReadoutConfusion{0.02, 0.02}};
    PauliSum z(1);
    z.add(1.0, PauliString::parse("Z"));
    const Circuit c(1);
    REQUIRE(estimate_expectation(c, z, m, 0, 0) == Catch::Approx(0.96));
}

TEST_CASE("Estimates are reproducible per seed", "[simulator]") {
    const NoiseModel m = NoiseModel::nisq_light();
    const double a = estimate_expectation(bell_like(), observable(), m, 1000, 5);
    const double b = estimate_expectation(bell_like(), observable(), m, 1000, 5);
    const double c = estimate_expectation(bell_like(), observable(), m, 1000, 6);
    REQUIRE(a == b);
    REQUIRE(a != c);
}
