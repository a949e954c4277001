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

#include "zpqe/circuit/compile.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zpqe/operator/fermion.hpp"

namespace zpqe {

Circuit compile_pauli_exponential(const PauliString& term, double angle) {
    const auto support = term.support();
    if (support.empty()) {
        throw std::invalid_argument("identity Pauli string has no circuit (global phase only)");
    }
    const double half_pi = std::numbers::pi / 2;
    Circuit c(term.num_qubits());
    for (std::size_t q : support) {
        if (term[q] == Pauli::X) c.append(Gate::h(q));
        if (term[q] == Pauli::Y) c.append(Gate::rx(q, half_pi));
    }
    for (std::size_t k = 0; k + 1 < support.size(); ++k) c.append(Gate::cx(support[k], support[k + 1]));
    c.append(Gate::rz(support.back(), angle));
    for (std::size_t k = support.size() - 1; k-- > 0;) c.append(Gate::cx(support[k], support[k + 1]));
    for (std::size_t q : support) {
        if (term[q] == Pauli::X) c.append(Gate::h(q));
        if (term[q] == Pauli::Y) c.append(Gate::rx(q, -half_pi));
    }
    return c;
}

DuccAnsatz::DuccAnsatz(std::vector<Excitation> pool, ReferenceState reference)
    : pool_(std::move(pool)), reference_(reference) {
    const std::size_t n = reference_.num_qubits();
    generators_.reserve(pool_.size());
    for (const auto& mu : pool_) {
        validate_excitation(mu, n);
        PauliSum g = jordan_wigner(excitation_generator(mu), n);
        for (const auto& [s, c] : g.terms()) {
            if (std::abs(c.real()) > 1e-12) {
                throw std::logic_error("generator for " + mu.str() + " is not anti-Hermitian");
            }
        }
        generators_.push_back(std::move(g));
    }
}

void DuccAnsatz::check_theta(std::span<const double> theta) const {
    if (theta.size() != pool_.size()) {
        throw std::invalid_argument("expected " + std::to_string(pool_.size()) + " ansatz parameters, got " +
                                    std::to_string(theta.size()));
    }
}

void DuccAnsatz::check_mu(std::size_t mu) const {
    if (mu >= pool_.size()) {
        throw std::out_of_range("excitation index " + std::to_string(mu) + " outside pool of " +
                                std::to_string(pool_.size()));
    }
}

Circuit DuccAnsatz::prepare_determinant(std::uint64_t occupation) const {
    Circuit c(num_qubits());
    for (std::size_t q = 0; q < num_qubits(); ++q) {
        if ((occupation >> q) & 1U) c.append(Gate::x(q));
    }
    return c;
}

void DuccAnsatz::append_exponential(Circuit& c, std::size_t mu, double t) const {
    check_mu(mu);
    // exp(t * i b P) = exp(-i (angle/2) P) with angle = -2 t b
    for (const auto& [s, coeff] : generators_[mu].terms()) {
        if (s.is_identity()) continue;
        c.append(compile_pauli_exponential(s, -2.0 * t * coeff.imag()));
    }
}

void DuccAnsatz::append_body(Circuit& c, std::span<const double> theta) const {
    check_theta(theta);
    for (std::size_t mu = 0; mu < pool_.size(); ++mu) append_exponential(c, mu, theta[mu]);
}

Circuit DuccAnsatz::circuit(std::span<const double> theta) const {
    Circuit c = prepare_determinant(reference_.occupation());
    append_body(c, theta);
    return c;
}

Circuit DuccAnsatz::superposition_circuit(std::span<const double> theta, std::size_t mu) const {
    check_mu(mu);
    Circuit c = prepare_determinant(reference_.occupation());
    append_exponential(c, mu, std::numbers::pi / 4);
    append_body(c, theta);
    return c;
}

Circuit DuccAnsatz::excited_circuit(std::span<const double> theta, std::size_t mu) const {
    check_mu(mu);
    Circuit c = prepare_determinant(pool_[mu].apply_to(reference_.occupation()));
    append_body(c, theta);
    return c;
}

Circuit build_ansatz_circuit(const std::vector<Excitation>& pool, std::span<const double> theta,
                             const ReferenceState& reference) {
    return DuccAnsatz(pool, reference).circuit(theta);
}

Circuit build_superposition_circuit(const std::vector<Excitation>& pool, std::span<const double> theta,
                            const ReferenceState& reference, std::size_t mu) {
    return DuccAnsatz(pool, reference).superposition_circuit(theta, mu);
}

}  // namespace zpqe
