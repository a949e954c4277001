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
#include "zpqe/operator/pauli.hpp"

using namespace zpqe;
using Catch::Matchers::WithinAbs;

TEST_CASE("Pauli string parsing and text form", "[pauli]") {
    const auto s = PauliString::parse("XIZY");
    REQUIRE(s.num_qubits() == 4);
    REQUIRE(s[0] == Pauli::X);
    REQUIRE(s[3] == Pauli::Y);
    REQUIRE(s.str() == "XIZY");
    REQUIRE(s.support() == std::vector<std::size_t>{0, 2, 3});
    REQUIRE(PauliString::parse("III").is_identity());
    REQUIRE_THROWS_AS(PauliString::parse("XQ"), std::invalid_argument);
}

TEST_CASE("Pauli products match dense matrix products", "[pauli]") {
    const std::vector<std::string> all = {"I", "X", "Y", "Z"};
    for (const auto& a : all) {
        for (const auto& b : all) {
            for (const auto& c : all) {
                const std::string sa = a + b;
                const std::string sb = b + c;
                auto [phase, prod] = multiply(PauliString::parse(sa), PauliString::parse(sb));
                const oracle::Mat expect = oracle::pauli_matrix(sa) * oracle::pauli_matrix(sb);
                const oracle::Mat got = phase * oracle::pauli_matrix(prod.str());
                REQUIRE((expect - got).norm() < 1e-14);

                const oracle::Mat ma = oracle::pauli_matrix(sa);
                const oracle::Mat mb = oracle::pauli_matrix(sb);
                const bool dense_commute = (ma * mb - mb * ma).norm() < 1e-12;
                REQUIRE(commutes(PauliString::parse(sa), PauliString::parse(sb)) == dense_commute);
            }
        }
    }
}

TEST_CASE("PauliSum to_matrix agrees with Kronecker construction", "[pauli]") {
    PauliSum h(3);
    h.add(0.5, PauliString::parse("XYZ"));
    h.add(-1.25, PauliString::parse("IIZ"));
    h.add(complex(0, 0.3), PauliString::parse("YYI"));
    const oracle::Mat expect = 0.5 * oracle::pauli_matrix("XYZ") - 1.25 * oracle::pauli_matrix("IIZ") +
                               complex(0, 0.3) * oracle::pauli_matrix("YYI");
    REQUIRE((h.to_matrix() - expect).norm() < 1e-14);
}

TEST_CASE("PauliSum canonical form merges and prunes", "[pauli]") {
    PauliSum s(2);
    s.add(1.0, PauliString::parse("XZ"));
    s.add(2.0, PauliString::parse("XZ"));
    s.add(1e-14, PauliString::parse("YY"));
    REQUIRE(s.size() == 2);
    s.prune();
    REQUIRE(s.size() == 1);
    REQUIRE(s.coefficient(PauliString::parse("XZ")) == complex(3.0));
    REQUIRE_THROWS_AS(s.add(1.0, PauliString::parse("XXX")), std::invalid_argument);
}

TEST_CASE("PauliSum matrix reconstruction is linear", "[pauli][property]") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> pick(0, 3);
    std::normal_distribution<double> g;
    auto random_sum = [&](std::size_t n) {
        PauliSum s(n);
        for (int t = 0; t < 6; ++t) {
            std::string ops;
            for (std::size_t q = 0; q < n; ++q) ops += "IXYZ"[pick(rng)];
            s.add(complex(g(rng), g(rng)), PauliString::parse(ops));
        }
        return s;
    };
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const PauliSum a = random_sum(n);
        const PauliSum b = random_sum(n);
        REQUIRE(((a + b).to_matrix() - (a.to_matrix() + b.to_matrix())).norm() < 1e-12);
        REQUIRE(((a * b).to_matrix() - a.to_matrix() * b.to_matrix()).norm() < 1e-11);
        const oracle::Vec v = oracle::random_state(n, rng);
        REQUIRE((a.apply(v) - a.to_matrix() * v).norm() < 1e-12);
    }
}

TEST_CASE("Hermiticity check looks at imaginary coefficients", "[pauli]") {
    PauliSum h(1);
    h.add(1.0, PauliString::parse("Z"));
    REQUIRE(h.is_hermitian());
    h.add(complex(0, 1e-3), PauliString::parse("X"));
    REQUIRE_FALSE(h.is_hermitian());
    REQUIRE((h.adjoint().to_matrix() - h.to_matrix().adjoint()).norm() < 1e-15);
}
