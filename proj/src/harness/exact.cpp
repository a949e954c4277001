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

#include "zpqe/harness/exact.hpp"

#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace zpqe {

double exact_ground_energy(const PauliSum& hamiltonian, std::size_t max_qubits) {
    if (hamiltonian.num_qubits() > max_qubits) {
        throw std::length_error("dense diagonalization limited to " + std::to_string(max_qubits) + " qubits");
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hamiltonian.to_matrix(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
    return solver.eigenvalues()(0);
}

}  // namespace zpqe
