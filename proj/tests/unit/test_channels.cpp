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
#include "zpqe/sim/channels.hpp"
#include "zpqe/sim/noise_model.hpp"

using namespace zpqe;

namespace {

oracle::Mat embed(const Eigen::Matrix2cd& op, std::size_t q, std::size_t n) {
    std::string ops(n, 'I');
    oracle::Mat out = oracle::Mat::Identity(1, 1);
    for (std::size_t k = n; k-- > 0;) {
        const Eigen::Matrix2cd f = k == q ? op : Eigen::Matrix2cd::Identity().eval();
        out = Eigen::kroneckerProduct(out, f).eval();
    }
    return out;
}

oracle::Mat depolarize_kraus(const oracle::Mat& rho, const std::vector<std::size_t>& qubits, std::size_t n, double p) {
    const std::size_t k = qubits.size();
    const std::size_t count = std::size_t{1} << (2 * k);
    oracle::Mat twirl = oracle::Mat::Zero(rho.rows(), rho.cols());
    for (std::size_t code = 0; code < count; ++code) {
        std::string ops(n, 'I');
        for (std::size_t j = 0; j < k; ++j) ops[qubits[j]] = "IXYZ"[(code >> (2 * j)) & 3U];
        const oracle::Mat pm = oracle::pauli_matrix(ops);
        twirl += pm * rho * pm;
    }
    return (1 - p) * rho + p / static_cast<double>(count) * twirl;
}

oracle::Mat relax_kraus(const oracle::Mat& rho, std::size_t q, std::size_t n, double t, double t1, double t2) {
    const double gamma = 1 - std::exp(-t / t1);
    Eigen::Matrix2cd k0, k1;
    k0 << 1, 0, 0, std::sqrt(1 - gamma);
    k1 << 0, std::sqrt(gamma), 0, 0;
    const oracle::Mat a0 = embed(k0, q, n), a1 = embed(k1, q, n);
    oracle::Mat out = a0 * rho * a0.adjoint() + a1 * rho * a1.adjoint();
    const double f = std::exp(-t / t2 + t / (2 * t1));
    Eigen::Matrix2cd z;
    z << 1, 0, 0, -1;
    const oracle::Mat zq = embed(z, q, n);
    return 0.5 * (1 + f) * out + 0.5 * (1 - f) * zq * out * zq;
}

}  // namespace

TEST_CASE("Depolarizing matches the Pauli twirl form", "[channels][property]") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + trial % 2;
        const oracle::Mat m = oracle::random_density(n, rng);
        const double p = 0.05 * (trial + 1) / 2.0;
        for (const std::vector<std::size_t>& qs : {std::vector<std::size_t>{1}, std::vector<std::size_t>{0, 1},
                                                   std::vector<std::size_t>{1, 0}}) {
            DensityMatrix rho = DensityMatrix::from_matrix(m);
            apply_depolarizing(rho, qs, p);
            REQUIRE((rho.to_matrix() - depolarize_kraus(m, qs, n, p)).norm() < 1e-13);
        }
    }
}

TEST_CASE("Full depolarizing of one qubit leaves the maximally mixed marginal", "[channels]") {
    DensityMatrix rho(1);
    const std::size_t q[] = {0};
    apply_depolarizing(rho, q, 1.0);
    REQUIRE(rho(0, 0).real() == Catch::Approx(0.5));
    REQUIRE(rho(1, 1).real() == Catch::Approx(0.5));
}

TEST_CASE("Thermal relaxation matches amplitude plus phase damping", "[channels][property]") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2;
        const oracle::Mat m = oracle::random_density(n, rng);
        const double t = 0.035 * (trial + 1);
        const double t1 = 100.0, t2 = 80.0;
        DensityMatrix rho = DensityMatrix::from_matrix(m);
        apply_thermal_relaxation(rho, trial % 2, t, t1, t2);
        REQUIRE((rho.to_matrix() - relax_kraus(m, trial % 2, n, t, t1, t2)).norm() < 1e-13);
        REQUIRE(std::abs(rho.trace() - 1.0) < 1e-13);
        REQUIRE(rho.min_eigenvalue() > -1e-12);
    }
}

TEST_CASE("Excited state decays towards ground", "[channels]") {
    DensityMatrix rho(1);
    rho(0, 0) = 0;
    rho(1, 1) = 1;
    apply_thermal_relaxation(rho, 0, 100.0, 100.0, 80.0);
    REQUIRE(rho(1, 1).real() == Catch::Approx(std::exp(-1.0)));
}

TEST_CASE("Infinite times mean no decay", "[channels]") {
    std::mt19937_64 rng(23);
    const oracle::Mat m = oracle::random_density(1, rng);
    DensityMatrix rho = DensityMatrix::from_matrix(m);
    apply_thermal_relaxation(rho, 0, 5.0, kInfiniteTime, kInfiniteTime);
    REQUIRE((rho.to_matrix() - m).norm() == 0.0);
}

TEST_CASE("Channel arguments are validated", "[channels]") {
    DensityMatrix rho(2);
    const std::size_t q0[] = {0};
    const std::size_t q3[] = {3};
    const std::size_t qq[] = {1, 1};
    REQUIRE_THROWS_AS(apply_depolarizing(rho, q0, 1.5), std::invalid_argument);
    REQUIRE_THROWS_AS(apply_depolarizing(rho, q3, 0.1), std::invalid_argument);
    REQUIRE_THROWS_AS(apply_depolarizing(rho, qq, 0.1), std::invalid_argument);
    REQUIRE_THROWS_AS(apply_thermal_relaxation(rho, 0, 1.0, 10.0, 30.0), std::invalid_argument);
    REQUIRE_THROWS_AS(apply_thermal_relaxation(rho, 0, -1.0, 10.0, 10.0), std::invalid_argument);
}
