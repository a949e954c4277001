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

#pragma once

// Independent dense-matrix references used as test oracles. Nothing here goes
// through PauliSum, jordan_wigner, or the circuit compiler.

#include <bit>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

namespace oracle {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// a_j on n modes, built from occupation-number states: a_j|k> = (-1)^{#occupied below j} |k ^ 2^j>.
inline Mat annihilator(std::size_t j, std::size_t n) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    Mat a = Mat::Zero(dim, dim);
    const std::uint64_t bit = std::uint64_t{1} << j;
    for (std::uint64_t k = 0; k < dim; ++k) {
        if (!(k & bit)) continue;
        const int below = std::popcount(k & (bit - 1));
        a(k ^ bit, k) = (below % 2) ? -1.0 : 1.0;
    }
    return a;
}

inline Mat creator(std::size_t j, std::size_t n) { return annihilator(j, n).adjoint(); }

/// Dense kappa_mu = tau - tau^dagger with tau = a+_a a+_b ... a_j a_i.
inline Mat kappa(const std::vector<std::size_t>& occupied, const std::vector<std::size_t>& virtuals, std::size_t n) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    Mat tau = Mat::Identity(dim, dim);
    for (std::size_t a : virtuals) tau = tau * creator(a, n);
    for (auto it = occupied.rbegin(); it != occupied.rend(); ++it) tau = tau * annihilator(*it, n);
    return tau - tau.adjoint();
}

inline Vec basis_state(std::uint64_t index, std::size_t n) {
    Vec v = Vec::Zero(std::int64_t{1} << n);
    v(index) = 1.0;
    return v;
}

/// Single-qubit Pauli matrices placed with Kronecker products; qubit q = bit q.
inline Mat pauli_matrix(const std::string& ops) {
    const std::size_t n = ops.size();
    Mat out = Mat::Identity(1, 1);
    for (std::size_t q = n; q-- > 0;) {
        Eigen::Matrix2cd p;
        switch (ops[q]) {
            case 'X': p << 0, 1, 1, 0; break;
            case 'Y': p << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0; break;
            case 'Z': p << 1, 0, 0, -1; break;
            default: p = Eigen::Matrix2cd::Identity();
        }
        out = Eigen::kroneckerProduct(out, p).eval();
    }
    return out;
}

inline Mat expm(const Mat& m) { return m.exp(); }

/// Distance between two unitaries modulo global phase.
inline double phase_distance(const Mat& a, const Mat& b) {
    const std::complex<double> overlap = (b.adjoint() * a).trace();
    const std::complex<double> phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : 1.0;
    return (a - phase * b).norm();
}

inline Vec random_state(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Vec v(std::int64_t{1} << n);
    for (auto& x : v) x = {g(rng), g(rng)};
    return v / v.norm();
}

/// Random mixed state: sum of a few weighted random pure states.
inline Mat random_density(std::size_t n, std::mt19937_64& rng, int rank = 3) {
    std::uniform_real_distribution<double> u(0.05, 1.0);
    const std::int64_t dim = std::int64_t{1} << n;
    Mat rho = Mat::Zero(dim, dim);
    double total = 0;
    for (int k = 0; k < rank; ++k) {
        const double w = u(rng);
        const Vec v = random_state(n, rng);
        rho += w * v * v.adjoint();
        total += w;
    }
    return rho / total;
}

}  // namespace oracle
