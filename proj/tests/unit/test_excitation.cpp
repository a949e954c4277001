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

#include <bit>
#include <set>

#include "oracles.hpp"
#include "zpqe/operator/excitation.hpp"

using namespace zpqe;

namespace {

// Brute-force enumeration of every spin-conserving single or double, used as
// an independent check on the pool generator.
std::set<Excitation> brute_force_pool(const ReferenceState& ref, std::size_t n) {
    std::set<Excitation> out;
    const std::uint64_t occ = ref.occupation();
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    const std::uint64_t vir = full & ~occ;
    for (std::uint64_t om = 1; om <= occ; ++om) {
        if ((om & ~occ) != 0) continue;
        const int rank = std::popcount(om);
        if (rank > 2) continue;
        for (std::uint64_t vm = 1; vm <= vir; ++vm) {
            if ((vm & ~vir) != 0 || std::popcount(vm) != rank) continue;
            const std::uint64_t alpha = (std::uint64_t{1} << (n / 2)) - 1;
            if (std::popcount(om & alpha) != std::popcount(vm & alpha)) continue;
            Excitation e;
            for (std::size_t q = 0; q < n; ++q) {
                if ((om >> q) & 1U) e.occupied.push_back(q);
                if ((vm >> q) & 1U) e.virtuals.push_back(q);
            }
            out.insert(e);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("Aufbau reference fills alpha then beta", "[excitation]") {
    REQUIRE(ReferenceState::aufbau(4, 2).occupied_indices() == std::vector<std::size_t>{0, 2});
    REQUIRE(ReferenceState::aufbau(6, 3).occupied_indices() == std::vector<std::size_t>{0, 1, 3});
    REQUIRE(ReferenceState::aufbau(6, 2).virtual_indices() == std::vector<std::size_t>{1, 2, 4, 5});
    REQUIRE_THROWS(ReferenceState::aufbau(4, 5));
}

TEST_CASE("Two-electron four-orbital pool", "[excitation]") {
    const auto pool = generate_ducc_sd_pool(ReferenceState::aufbau(4, 2), 4);
    REQUIRE(pool.size() == 3);
    REQUIRE(pool[0] == Excitation{{0}, {1}});
    REQUIRE(pool[1] == Excitation{{2}, {3}});
    REQUIRE(pool[2] == Excitation{{0, 2}, {1, 3}});
}

TEST_CASE("Fully occupied reference gives an empty pool", "[excitation]") {
    REQUIRE(generate_ducc_sd_pool(ReferenceState::aufbau(4, 4), 4).empty());
}

TEST_CASE("Pool matches brute-force enumeration", "[excitation][property]") {
    for (std::size_t n : {4, 6, 8}) {
        for (std::size_t ne = 1; ne < n; ++ne) {
            const auto ref = ReferenceState::aufbau(n, ne);
            const auto pool = generate_ducc_sd_pool(ref, n);
            const std::set<Excitation> got(pool.begin(), pool.end());
            REQUIRE(got.size() == pool.size());
            REQUIRE(got == brute_force_pool(ref, n));
            std::size_t singles = 0;
            while (singles < pool.size() && pool[singles].rank() == 1) ++singles;
            for (std::size_t k = singles; k < pool.size(); ++k) REQUIRE(pool[k].rank() == 2);
        }
    }
}

TEST_CASE("Generators are anti-Hermitian and act as excitations", "[excitation][property]") {
    const std::size_t n = 6;
    const auto ref = ReferenceState::aufbau(n, 2);
    const oracle::Vec phi0 = oracle::basis_state(ref.occupation(), n);
    for (const auto& mu : generate_ducc_sd_pool(ref, n)) {
        const oracle::Mat k = jordan_wigner(excitation_generator(mu), n).to_matrix();
        REQUIRE((k + k.adjoint()).norm() < 1e-14);
        REQUIRE((k - oracle::kappa(mu.occupied, mu.virtuals, n)).norm() < 1e-14);

        const oracle::Vec excited = k * phi0;
        REQUIRE(std::abs(excited.norm() - 1.0) < 1e-14);
        REQUIRE(std::abs(std::abs(excited(mu.apply_to(ref.occupation()))) - 1.0) < 1e-14);
        REQUIRE(((k * excited) + phi0).norm() < 1e-14);

        const oracle::Mat u = oracle::expm(0.37 * k);
        REQUIRE((u.adjoint() * u - oracle::Mat::Identity(u.rows(), u.cols())).norm() < 1e-12);
    }
}

TEST_CASE("Malformed excitations are rejected", "[excitation]") {
    REQUIRE_THROWS_AS(validate_excitation({{0, 0}, {1, 3}}, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(validate_excitation({{0}, {1, 3}}, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(validate_excitation({{0}, {4}}, 4), std::out_of_range);
    REQUIRE_THROWS_AS(validate_excitation({{0}, {0}}, 4), std::invalid_argument);
    REQUIRE_NOTHROW(validate_excitation({{0, 2}, {1, 3}}, 4));
}

TEST_CASE("Moller-Plesset denominators", "[excitation]") {
    const std::vector<double> eps = {-0.5, 0.2, -0.5, 0.2};
    REQUIRE(mp_denominator({{0}, {1}}, eps) == Catch::Approx(-0.7));
    REQUIRE(mp_denominator({{0, 2}, {1, 3}}, eps) == Catch::Approx(-1.4));
    const std::vector<double> degenerate = {0.1, 0.1, 0.1, 0.1};
    REQUIRE_THROWS_AS(mp_denominator({{0}, {1}}, degenerate), std::domain_error);
    REQUIRE_THROWS_AS(mp_denominator({{0}, {5}}, eps), std::out_of_range);
}
