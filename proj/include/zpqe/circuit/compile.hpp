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
#include <span>
#include <vector>

#include "zpqe/circuit/circuit.hpp"
#include "zpqe/operator/excitation.hpp"
#include "zpqe/operator/pauli.hpp"

namespace zpqe {

/// exp(-i (angle/2) P) as basis change (H for X, RX(pi/2) for Y), a CX ladder
/// onto the highest active qubit, RZ(angle), then the mirror image.
/// Throws std::invalid_argument for the identity string.
Circuit compile_pauli_exponential(const PauliString& term, double angle);

/// Disentangled UCC ansatz U(theta) = prod_mu exp(theta_mu kappa_mu) over an
/// ordered pool. The circuit applies pool[0] first. Each generator is stored as
/// its Jordan-Wigner image, whose terms pairwise commute, so its exponential
/// factorizes exactly into one Pauli rotation per term.
class DuccAnsatz {
  public:
    DuccAnsatz(std::vector<Excitation> pool, ReferenceState reference);

    std::size_t num_parameters() const { return pool_.size(); }
    std::size_t num_qubits() const { return reference_.num_qubits(); }
    const std::vector<Excitation>& pool() const { return pool_; }
    const ReferenceState& reference() const { return reference_; }
    /// JW(kappa_mu), anti-Hermitian.
    const PauliSum& generator(std::size_t mu) const { return generators_.at(mu); }

    /// X gates preparing the determinant with the given occupation.
    Circuit prepare_determinant(std::uint64_t occupation) const;

    /// Appends exp(t * kappa_mu) to `c`.
    void append_exponential(Circuit& c, std::size_t mu, double t) const;

    /// Appends exp(theta_{m-1} kappa_{m-1}) ... exp(theta_0 kappa_0).
    void append_body(Circuit& c, std::span<const double> theta) const;

    /// U(theta)|Phi_o>.
    Circuit circuit(std::span<const double> theta) const;

    /// U(theta) exp((pi/4) kappa_mu)|Phi_o>  (equal superposition of reference and excited determinant).
    Circuit superposition_circuit(std::span<const double> theta, std::size_t mu) const;

    /// U(theta)|Phi_mu>, with |Phi_mu> prepared by X gates on the excited occupation.
    Circuit excited_circuit(std::span<const double> theta, std::size_t mu) const;

  private:
    void check_theta(std::span<const double> theta) const;
    void check_mu(std::size_t mu) const;

    std::vector<Excitation> pool_;
    ReferenceState reference_;
    std::vector<PauliSum> generators_;
};

Circuit build_ansatz_circuit(const std::vector<Excitation>& pool, std::span<const double> theta,
                             const ReferenceState& reference);

Circuit build_superposition_circuit(const std::vector<Excitation>& pool, std::span<const double> theta,
                            const ReferenceState& reference, std::size_t mu);

}  // namespace zpqe
