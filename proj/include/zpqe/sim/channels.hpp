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

#include "zpqe/sim/density_matrix.hpp"

namespace zpqe {

/// rho -> (1 - p) rho + p (I/d) (x) Tr_qubits(rho) on one or two qubits.
/// Throws std::invalid_argument for p outside [0, 1] or more than two qubits.
void apply_depolarizing(DensityMatrix& rho, std::span<const std::size_t> qubits, double p);

/// Amplitude damping with gamma = 1 - exp(-duration/t1) toward |0>, and
/// coherences scaled by exp(-duration/t2) in total. Infinite t1/t2 disable the
/// respective decay. Throws std::invalid_argument when t2 > 2 t1 or duration < 0.
void apply_thermal_relaxation(DensityMatrix& rho, std::size_t qubit, double duration, double t1, double t2);

}  // namespace zpqe
