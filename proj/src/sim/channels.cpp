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

#include "zpqe/sim/channels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace zpqe {

namespace {

void depolarize_1q(DensityMatrix& rho, std::size_t q, double p) {
    const std::size_t bit = std::size_t{1} << q;
    const std::size_t d = rho.dim();
    for (std::size_t r = 0; r < d; ++r) {
        if (r & bit) continue;
        for (std::size_t c = 0; c < d; ++c) {
            if (c & bit) continue;
            const complex a00 = rho(r, c);
            const complex a11 = rho(r | bit, c | bit);
            const complex mixed = 0.5 * p * (a00 + a11);
            rho(r, c) = (1 - p) * a00 + mixed;
            rho(r | bit, c | bit) = (1 - p) * a11 + mixed;
            rho(r | bit, c) *= 1 - p;
            rho(r, c | bit) *= 1 - p;
        }
    }
}

void depolarize_2q(DensityMatrix& rho, std::size_t q0, std::size_t q1, double p) {
    const std::size_t b[4] = {0, std::size_t{1} << q0, std::size_t{1} << q1,
                              (std::size_t{1} << q0) | (std::size_t{1} << q1)};
    const std::size_t both = b[3];
    const std::size_t d = rho.dim();
    for (std::size_t r = 0; r < d; ++r) {
        if (r & both) continue;
        for (std::size_t c = 0; c < d; ++c) {
            if (c & both) continue;
            complex sum = 0.0;
            for (int s = 0; s < 4; ++s) sum += rho(r | b[s], c | b[s]);
            const complex mixed = 0.25 * p * sum;
            for (int s = 0; s < 4; ++s) {
                for (int t = 0; t < 4; ++t) {
                    complex& v = rho(r | b[s], c | b[t]);
                    v = (1 - p) * v + (s == t ? mixed : complex{});
                }
            }
        }
    }
}

}  // namespace

void apply_depolarizing(DensityMatrix& rho, std::span<const std::size_t> qubits, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("depolarizing probability " + std::to_string(p) + " outside [0, 1]");
    }
    for (std::size_t q : qubits) {
        if (q >= rho.num_qubits()) throw std::invalid_argument("depolarizing qubit out of range");
    }
    if (p == 0.0) return;
    if (qubits.size() == 1) {
        depolarize_1q(rho, qubits[0], p);
    } else if (qubits.size() == 2 && qubits[0] != qubits[1]) {
        depolarize_2q(rho, qubits[0], qubits[1], p);
    } else {
        throw std::invalid_argument("depolarizing acts on one or two distinct qubits");
    }
}

void apply_thermal_relaxation(DensityMatrix& rho, std::size_t qubit, double duration, double t1, double t2) {
    if (!(duration >= 0.0)) throw std::invalid_argument("relaxation duration must be >= 0");
    if (!(t1 > 0.0) || !(t2 > 0.0)) throw std::invalid_argument("T1 and T2 must be positive");
    if (t2 > 2.0 * t1) throw std::invalid_argument("unphysical relaxation times: T2 > 2 T1");
    if (qubit >= rho.num_qubits()) throw std::invalid_argument("relaxation qubit out of range");
    if (duration == 0.0) return;

    const double gamma = std::isinf(t1) ? 0.0 : 1.0 - std::exp(-duration / t1);
    const double coherence = std::isinf(t2) ? 1.0 : std::exp(-duration / t2);
    if (gamma == 0.0 && coherence == 1.0) return;

    const std::size_t bit = std::size_t{1} << qubit;
    const std::size_t d = rho.dim();
    for (std::size_t r = 0; r < d; ++r) {
        if (r & bit) continue;
        for (std::size_t c = 0; c < d; ++c) {
            if (c & bit) continue;
            const complex a11 = rho(r | bit, c | bit);
            rho(r, c) += gamma * a11;
            rho(r | bit, c | bit) = (1 - gamma) * a11;
            rho(r | bit, c) *= coherence;
            rho(r, c | bit) *= coherence;
        }
    }
}

}  // namespace zpqe
