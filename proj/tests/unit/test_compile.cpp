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

#include <numbers>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "zpqe/circuit/compile.hpp"

using namespace zpqe;

namespace {

std::string random_pauli(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, 3);
    std::string s;
    while (s.find_first_not_of('I') == std::string::npos) {
        s.clear();
        for (std::size_t q = 0; q < n; ++q) s += "IXYZ"[pick(rng)];
    }
    return s;
}

}  // namespace

TEST_CASE("Gate matrices are unitary and inverses cancel", "[compile]") {
    const std::vector<Gate> gates = {Gate::x(0), Gate::sx(0), Gate::sxdg(0), Gate::h(0),
                                     Gate::rz(0, 0.3), Gate::rx(0, -1.1), Gate::ry(0, 2.2), Gate::cx(0, 1)};
    for (const auto& g : gates) {
        const oracle::Mat m = g.matrix();
        const oracle::Mat id = oracle::Mat::Identity(m.rows(), m.cols());
        REQUIRE((m.adjoint() * m - id).norm() < 1e-14);
        REQUIRE((g.inverse().matrix() * m - id).norm() < 1e-14);
        REQUIRE(gate_kind_from_name(gate_name(g.kind)) == g.kind);
    }
    Eigen::Matrix2cd sx2 = Gate::sx(0).matrix() * Gate::sx(0).matrix();
    REQUIRE((sx2 - Gate::x(0).matrix()).norm() < 1e-14);
}

TEST_CASE("Circuit validates qubits and round-trips through dump", "[compile]") {
    Circuit c(3);
    REQUIRE_THROWS_AS(c.append(Gate::x(3)), std::invalid_argument);
    REQUIRE_THROWS_AS(c.append(Gate::cx(1, 1)), std::invalid_argument);
    c.append(Gate::h(0));
    c.append(Gate::cx(0, 2));
    c.append(Gate::rz(2, 0.125));
    std::istringstream in(c.dump());
    REQUIRE(Circuit::parse_dump(in, 3) == c);
    REQUIRE(c.count(GateKind::CX) == 1);
    REQUIRE((c.inverse().unitary() * c.unitary() - oracle::Mat::Identity(8, 8)).norm() < 1e-14);
}

TEST_CASE("CX acts on the stated control and target", "[compile]") {
    Circuit c(2);
    c.append(Gate::cx(0, 1));
    // control is qubit 0 (low bit): |01> (index 1) -> index 3
    REQUIRE(std::abs(simulate_statevector([&] {
                         Circuit p(2);
                         p.append(Gate::x(0));
                         p.append(c);
                         return p;
                     }())(3)) == Catch::Approx(1.0));
    REQUIRE((c.unitary() - oracle::pauli_matrix("II") * 0.5 - oracle::pauli_matrix("ZI") * 0.5 -
             oracle::pauli_matrix("IX") * 0.5 + oracle::pauli_matrix("ZX") * 0.5)
                .norm() < 1e-14);
}

TEST_CASE("Pauli exponentials compile to exp(-i a/2 P)", "[compile][property]") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const std::string p = random_pauli(n, rng);
        const double a = angle(rng);
        const Circuit c = compile_pauli_exponential(PauliString::parse(p), a);
        const oracle::Mat expect = oracle::expm(std::complex<double>(0, -a / 2) * oracle::pauli_matrix(p));
        REQUIRE((c.unitary() - expect).norm() < 1e-12);
    }
    REQUIRE_THROWS_AS(compile_pauli_exponential(PauliString::parse("II"), 0.1), std::invalid_argument);
}

TEST_CASE("Ansatz circuit equals the ordered product of exponentials", "[compile][property]") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-0.8, 0.8);
    for (auto [n, ne] : {std::pair<std::size_t, std::size_t>{4, 2}, {6, 2}, {6, 3}}) {
        const auto ref = ReferenceState::aufbau(n, ne);
        const auto pool = generate_ducc_sd_pool(ref, n);
        const DuccAnsatz ansatz(pool, ref);
        std::vector<double> theta(pool.size());
        for (auto& t : theta) t = u(rng);

        oracle::Mat body = oracle::Mat::Identity(std::int64_t{1} << n, std::int64_t{1} << n);
        for (std::size_t k = 0; k < pool.size(); ++k) {
            body = oracle::expm(theta[k] * oracle::kappa(pool[k].occupied, pool[k].virtuals, n)) * body;
        }
        const oracle::Vec phi0 = oracle::basis_state(ref.occupation(), n);
        REQUIRE((simulate_statevector(ansatz.circuit(theta)) - body * phi0).norm() < 1e-10);

        for (std::size_t mu = 0; mu < pool.size(); ++mu) {
            const oracle::Mat k = oracle::kappa(pool[mu].occupied, pool[mu].virtuals, n);
            const oracle::Vec omega = body * oracle::expm(std::numbers::pi / 4 * k) * phi0;
            REQUIRE((simulate_statevector(ansatz.superposition_circuit(theta, mu)) - omega).norm() < 1e-10);
            // the X-prepared determinant agrees with kappa|Phi_o> up to sign
            const oracle::Vec excited = body * (k * phi0);
            const oracle::Vec got = simulate_statevector(ansatz.excited_circuit(theta, mu));
            REQUIRE(std::abs(std::abs(got.dot(excited)) - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("Ansatz rejects wrong parameter counts", "[compile]") {
    const auto ref = ReferenceState::aufbau(4, 2);
    const DuccAnsatz ansatz(generate_ducc_sd_pool(ref, 4), ref);
    std::vector<double> theta(2, 0.0);
    REQUIRE_THROWS_AS(ansatz.circuit(theta), std::invalid_argument);
    theta.resize(3);
    REQUIRE_THROWS_AS(ansatz.superposition_circuit(theta, 3), std::out_of_range);
    // zero angles still emit every rotation so the circuit shape does not depend on theta
    const Circuit zero = ansatz.circuit(theta);
    theta = {0.1, 0.2, 0.3};
    REQUIRE(zero.size() == ansatz.circuit(theta).size());
    REQUIRE(zero.count(GateKind::X) == 2);
}
