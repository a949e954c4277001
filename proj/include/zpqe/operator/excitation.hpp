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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zpqe/operator/fermion.hpp"

namespace zpqe {

/// Occupied spin-orbitals of a single determinant. Qubit q <-> spin-orbital q.
class ReferenceState {
  public:
    ReferenceState() = default;
    ReferenceState(std::size_t n_qubits, std::uint64_t occupation);
    static ReferenceState from_indices(std::size_t n_qubits, std::span<const std::size_t> occupied);

    /// Aufbau determinant in blocked ordering: the lowest ceil(N/2) alpha
    /// spin-orbitals [0, n/2) and lowest floor(N/2) beta spin-orbitals [n/2, n).
    static ReferenceState aufbau(std::size_t n_qubits, std::size_t n_electrons);

    std::size_t num_qubits() const { return n_qubits_; }
    std::uint64_t occupation() const { return occupation_; }
    std::size_t num_electrons() const;
    bool occupied(std::size_t q) const { return (occupation_ >> q) & 1U; }
    std::vector<std::size_t> occupied_indices() const;
    std::vector<std::size_t> virtual_indices() const;

    bool operator==(const ReferenceState&) const = default;

  private:
    std::size_t n_qubits_ = 0;
    std::uint64_t occupation_ = 0;
};

/// Particle-hole excitation {i, j, ...} -> {a, b, ...}.
struct Excitation {
    std::vector<std::size_t> occupied;
    std::vector<std::size_t> virtuals;

    std::size_t rank() const { return occupied.size(); }
    std::string str() const;

    /// Occupation bitmask after exciting `reference` (the determinant |Phi_mu>).
    std::uint64_t apply_to(std::uint64_t reference_occupation) const;

    auto operator<=>(const Excitation&) const = default;
};

/// Throws std::invalid_argument unless both lists are sorted, disjoint, of equal
/// length, and below `n_spin_orbitals`.
void validate_excitation(const Excitation& mu, std::size_t n_spin_orbitals);

/// Spin of spin-orbital p under blocked ordering: 0 for alpha, 1 for beta.
inline int blocked_spin(std::size_t p, std::size_t n_spin_orbitals) {
    return p < n_spin_orbitals / 2 ? 0 : 1;
}

/// All spin- and particle-number-conserving singles and doubles out of
/// `reference`. Singles come first, then doubles; each block is sorted
/// lexicographically by (occupied, virtuals). This order is the ansatz product order.
std::vector<Excitation> generate_ducc_sd_pool(const ReferenceState& reference,
                                              std::size_t n_spin_orbitals);

/// kappa = tau - tau^dagger with tau = a+_a a+_b ... a_j a_i.
FermionOperator excitation_generator(const Excitation& mu);

inline constexpr double kDefaultDenominatorFloor = 1e-6;

/// Delta_mu = sum eps_occupied - sum eps_virtual. Throws std::domain_error when
/// |Delta_mu| < floor and std::out_of_range for indices past `orbital_energies`.
double mp_denominator(const Excitation& mu, std::span<const double> orbital_energies,
                      double floor = kDefaultDenominatorFloor);

}  // namespace zpqe
