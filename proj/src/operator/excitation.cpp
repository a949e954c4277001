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

#include "zpqe/operator/excitation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace zpqe {

ReferenceState::ReferenceState(std::size_t n_qubits, std::uint64_t occupation)
    : n_qubits_(n_qubits), occupation_(occupation) {
    if (n_qubits > 63) throw std::invalid_argument("at most 63 qubits are supported");
    if (n_qubits < 64 && (occupation >> n_qubits) != 0) {
        throw std::invalid_argument("reference occupation has bits beyond n_qubits");
    }
}

ReferenceState ReferenceState::from_indices(std::size_t n_qubits, std::span<const std::size_t> occupied) {
    std::uint64_t occ = 0;
    for (std::size_t q : occupied) {
        if (q >= n_qubits) throw std::invalid_argument("reference index out of range");
        occ |= std::uint64_t{1} << q;
    }
    return ReferenceState(n_qubits, occ);
}

ReferenceState ReferenceState::aufbau(std::size_t n_qubits, std::size_t n_electrons) {
    if (n_qubits % 2 != 0) throw std::invalid_argument("blocked ordering needs an even qubit count");
    const std::size_t half = n_qubits / 2;
    const std::size_t n_alpha = (n_electrons + 1) / 2;
    const std::size_t n_beta = n_electrons / 2;
    if (n_alpha > half) throw std::invalid_argument("more electrons than spin-orbitals");
    std::uint64_t occ = 0;
    for (std::size_t k = 0; k < n_alpha; ++k) occ |= std::uint64_t{1} << k;
    for (std::size_t k = 0; k < n_beta; ++k) occ |= std::uint64_t{1} << (half + k);
    return ReferenceState(n_qubits, occ);
}

std::size_t ReferenceState::num_electrons() const { return static_cast<std::size_t>(std::popcount(occupation_)); }

std::vector<std::size_t> ReferenceState::occupied_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < n_qubits_; ++q) {
        if (occupied(q)) out.push_back(q);
    }
    return out;
}

std::vector<std::size_t> ReferenceState::virtual_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < n_qubits_; ++q) {
        if (!occupied(q)) out.push_back(q);
    }
    return out;
}

std::string Excitation::str() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < occupied.size(); ++k) os << (k ? "," : "") << occupied[k];
    os << "->";
    for (std::size_t k = 0; k < virtuals.size(); ++k) os << (k ? "," : "") << virtuals[k];
    return os.str();
}

std::uint64_t Excitation::apply_to(std::uint64_t reference_occupation) const {
    std::uint64_t occ = reference_occupation;
    for (std::size_t i : occupied) occ &= ~(std::uint64_t{1} << i);
    for (std::size_t a : virtuals) occ |= std::uint64_t{1} << a;
    return occ;
}

void validate_excitation(const Excitation& mu, std::size_t n_spin_orbitals) {
    if (mu.occupied.size() != mu.virtuals.size() || mu.occupied.empty()) {
        throw std::invalid_argument("excitation " + mu.str() + " must have equal, nonzero rank");
    }
    auto check = [&](const std::vector<std::size_t>& idx) {
        if (!std::is_sorted(idx.begin(), idx.end()) ||
            std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
            throw std::invalid_argument("excitation " + mu.str() + " indices must be strictly increasing");
        }
        if (idx.back() >= n_spin_orbitals) {
            throw std::out_of_range("excitation " + mu.str() + " index out of range");
        }
    };
    check(mu.occupied);
    check(mu.virtuals);
    for (std::size_t i : mu.occupied) {
        if (std::binary_search(mu.virtuals.begin(), mu.virtuals.end(), i)) {
            throw std::invalid_argument("excitation " + mu.str() + " has overlapping indices");
        }
    }
}

std::vector<Excitation> generate_ducc_sd_pool(const ReferenceState& reference, std::size_t n_spin_orbitals) {
    const std::size_t n_elec = reference.num_electrons();
    if (n_elec < 1 || n_spin_orbitals < n_elec) {
        throw std::invalid_argument("pool generation needs 1 <= electrons <= spin-orbitals");
    }
    if (reference.num_qubits() != n_spin_orbitals) {
        throw std::invalid_argument("reference width does not match spin-orbital count");
    }
    if (n_spin_orbitals % 2 != 0) throw std::invalid_argument("blocked ordering needs an even spin-orbital count");

    const auto occ = reference.occupied_indices();
    const auto vir = reference.virtual_indices();
    auto spin = [&](std::size_t p) { return blocked_spin(p, n_spin_orbitals); };

    std::vector<Excitation> singles;
    for (std::size_t i : occ) {
        for (std::size_t a : vir) {
            if (spin(i) == spin(a)) singles.push_back({{i}, {a}});
        }
    }
    std::vector<Excitation> doubles;
    for (std::size_t x = 0; x < occ.size(); ++x) {
        for (std::size_t y = x + 1; y < occ.size(); ++y) {
            for (std::size_t u = 0; u < vir.size(); ++u) {
                for (std::size_t v = u + 1; v < vir.size(); ++v) {
                    if (spin(occ[x]) + spin(occ[y]) == spin(vir[u]) + spin(vir[v])) {
                        doubles.push_back({{occ[x], occ[y]}, {vir[u], vir[v]}});
                    }
                }
            }
        }
    }
    std::sort(singles.begin(), singles.end());
    std::sort(doubles.begin(), doubles.end());
    singles.insert(singles.end(), doubles.begin(), doubles.end());
    return singles;
}

FermionOperator excitation_generator(const Excitation& mu) {
    std::vector<LadderOp> ops;
    for (std::size_t a : mu.virtuals) ops.push_back({a, true});
    for (auto it = mu.occupied.rbegin(); it != mu.occupied.rend(); ++it) ops.push_back({*it, false});
    FermionOperator tau;
    tau.add(1.0, std::move(ops));
    return tau - tau.adjoint();
}

double mp_denominator(const Excitation& mu, std::span<const double> orbital_energies, double floor) {
    auto eps = [&](std::size_t p) {
        if (p >= orbital_energies.size()) throw std::out_of_range("orbital energy index out of range");
        return orbital_energies[p];
    };
    double delta = 0.0;
    for (std::size_t i : mu.occupied) delta += eps(i);
    for (std::size_t a : mu.virtuals) delta -= eps(a);
    if (std::abs(delta) < floor) {
        throw std::domain_error("denominator for excitation " + mu.str() + " is below the floor (" +
                                std::to_string(delta) + ")");
    }
    return delta;
}

}  // namespace zpqe
