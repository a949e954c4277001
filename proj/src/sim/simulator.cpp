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

#include "zpqe/sim/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zpqe/sim/channels.hpp"

namespace zpqe {

void apply_gate_with_noise(DensityMatrix& rho, const Gate& gate, const NoiseModel& model) {
    const Eigen::MatrixXcd u = gate.matrix();
    const double duration = model.duration_us(gate.kind);
    if (gate.arity() == 1) {
        rho.apply_unitary(gate.qubits[0], Eigen::Matrix2cd(u));
        const std::size_t q[1] = {gate.qubits[0]};
        apply_depolarizing(rho, q, model.p_depol_1q);
    } else {
        rho.apply_unitary(gate.qubits[0], gate.qubits[1], Eigen::Matrix4cd(u));
        const std::size_t q[2] = {gate.qubits[0], gate.qubits[1]};
        apply_depolarizing(rho, q, model.p_depol_2q);
    }
    for (std::size_t k = 0; k < gate.arity(); ++k) {
        const std::size_t q = gate.qubits[k];
        apply_thermal_relaxation(rho, q, duration, model.t1(q), model.t2(q));
    }
}

DensityMatrix simulate(const Circuit& circuit, const NoiseModel& model, std::size_t max_qubits) {
    if (circuit.num_qubits() > max_qubits) {
        throw std::length_error("circuit has " + std::to_string(circuit.num_qubits()) +
                                " qubits; the density-matrix simulator is capped at " + std::to_string(max_qubits));
    }
    DensityMatrix rho(circuit.num_qubits());
    const bool noisy = model.has_gate_noise();
    for (const Gate& g : circuit.gates()) {
        if (noisy) {
            apply_gate_with_noise(rho, g, model);
        } else if (g.arity() == 1) {
            rho.apply_unitary(g.qubits[0], Eigen::Matrix2cd(g.matrix()));
        } else {
            rho.apply_unitary(g.qubits[0], g.qubits[1], Eigen::Matrix4cd(g.matrix()));
        }
    }
    return rho;
}

std::vector<double> apply_readout_confusion(std::span<const double> ideal_probs, const NoiseModel& model) {
    std::vector<double> p(ideal_probs.begin(), ideal_probs.end());
    std::size_t n = 0;
    while ((std::size_t{1} << n) < p.size()) ++n;
    if ((std::size_t{1} << n) != p.size()) throw std::invalid_argument("distribution size must be a power of two");
    for (std::size_t q = 0; q < n; ++q) {
        const ReadoutConfusion& r = model.readout_for(q);
        if (r.is_identity()) continue;
        const std::size_t bit = std::size_t{1} << q;
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (k & bit) continue;
            const double t0 = p[k];
            const double t1 = p[k | bit];
            p[k] = r.p0_given_0() * t0 + r.p0_given_1 * t1;
            p[k | bit] = r.p1_given_0 * t0 + r.p1_given_1() * t1;
        }
    }
    return p;
}

MeasurementOutcome sample_counts(std::span<const double> probs, std::size_t shots, Rng& rng) {
    MeasurementOutcome out;
    out.shots = shots;
    std::size_t remaining = shots;
    double mass_left = 1.0;
    for (std::size_t k = 0; k < probs.size() && remaining > 0; ++k) {
        const double p = std::max(0.0, probs[k]);
        std::size_t n = 0;
        if (k + 1 == probs.size() || p >= mass_left) {
            n = remaining;
        } else if (p > 0.0) {
            std::binomial_distribution<std::size_t> draw(remaining, std::min(1.0, p / mass_left));
            n = draw(rng);
        }
        if (n > 0) out.counts[k] = n;
        remaining -= n;
        mass_left -= p;
        if (mass_left <= 0.0) mass_left = 0.0;
    }
    if (remaining > 0) out.counts[probs.size() - 1] += remaining;
    return out;
}

ObservableEstimator::ObservableEstimator(const DensityMatrix& rho, const PauliSum& observable,
                                         const NoiseModel& model) {
    if (observable.num_qubits() != rho.num_qubits()) throw std::invalid_argument("observable width mismatch");
    std::map<std::string, std::size_t> basis_index;
    for (const auto& [s, c] : observable.terms()) {
        if (std::abs(c.imag()) > 1e-10) throw std::invalid_argument("observable must be Hermitian");
        if (s.is_identity()) {
            identity_ += c.real();
            continue;
        }
        // X and Y need a rotation; Z and I share the computational basis.
        std::string key(s.num_qubits(), 'Z');
        for (std::size_t q = 0; q < s.num_qubits(); ++q) {
            if (s[q] == Pauli::X || s[q] == Pauli::Y) key[q] = to_char(s[q]);
        }
        auto [it, inserted] = basis_index.emplace(key, distributions_.size());
        if (inserted) {
            DensityMatrix rotated = rho;
            for (std::size_t q = 0; q < s.num_qubits(); ++q) {
                if (key[q] == 'X') rotated.apply_unitary(q, Eigen::Matrix2cd(Gate::h(q).matrix()));
                if (key[q] == 'Y') rotated.apply_unitary(q, Eigen::Matrix2cd(Gate::rx(q, std::numbers::pi / 2).matrix()));
            }
            auto probs = rotated.diagonal();
            for (double& p : probs) p = std::max(0.0, p);
            distributions_.push_back(apply_readout_confusion(probs, model));
        }
        std::uint64_t support = 0;
        for (std::size_t q : s.support()) support |= std::uint64_t{1} << q;
        terms_.push_back(Term{c.real(), support, it->second});
    }
}

namespace {
int parity_sign(std::uint64_t k, std::uint64_t support) { return std::popcount(k & support) % 2 ? -1 : 1; }
}  // namespace

double ObservableEstimator::exact() const {
    double total = identity_;
    for (const Term& t : terms_) {
        const auto& p = distributions_[t.distribution];
        double e = 0.0;
        for (std::size_t k = 0; k < p.size(); ++k) e += parity_sign(k, t.support) * p[k];
        total += t.coeff * e;
    }
    return total;
}

double ObservableEstimator::sample(std::size_t shots, Rng& rng) const {
    if (shots == 0) return exact();
    double total = identity_;
    for (const Term& t : terms_) {
        const MeasurementOutcome m = sample_counts(distributions_[t.distribution], shots, rng);
        long long signed_sum = 0;
        for (const auto& [k, n] : m.counts) signed_sum += parity_sign(k, t.support) * static_cast<long long>(n);
        total += t.coeff * static_cast<double>(signed_sum) / static_cast<double>(shots);
    }
    return total;
}

double estimate_expectation(const Circuit& circuit, const PauliSum& observable, const NoiseModel& model,
                            std::size_t shots, std::uint64_t seed) {
    const DensityMatrix rho = simulate(circuit, model);
    Rng rng(seed);
    return ObservableEstimator(rho, observable, model).sample(shots, rng);
}

}  // namespace zpqe
