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

#include "zpqe/operator/pauli.hpp"

namespace zpqe {

/// Smallest eigenvalue of the dense Hamiltonian. Throws std::length_error above `max_qubits`.
double exact_ground_energy(const PauliSum& hamiltonian, std::size_t max_qubits = 12);

}  // namespace zpqe
