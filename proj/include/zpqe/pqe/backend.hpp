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

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "zpqe/circuit/circuit.hpp"
#include "zpqe/operator/pauli.hpp"
#include "zpqe/sim/noise_model.hpp"
#include "zpqe/zne/zne.hpp"

namespace zpqe {

/// Which diagonal terms receive zero-noise extrapolation.
enum class MitigationScope { AllDiagonals, EnergyOnly };

std::string_view scope_name(MitigationScope scope);
MitigationScope parse_scope(std::string_view name);

/// How expectation values are obtained: noise model, shot budget and optional ZNE.
struct Backend {
    NoiseModel noise = NoiseModel::ideal();
    ShotConfig shots{0, 1};
    std::optional<ZneConfig> zne;
    MitigationScope scope = MitigationScope::AllDiagonals;

    bool exact() const { return shots.shots == 0; }
    void validate() const;
};

/// One diagonal expectation value plus the per-scale data behind it.
struct DiagonalValue {
    double value = 0.0;
    std::vector<NoisePoint> points;  // one entry when unmitigated
    std::optional<FitResult> fit;
};

/// Measures <observable> on the transpiled `circuit` according to `backend`.
/// `mitigate` is ignored when the backend has no ZNE configuration.
DiagonalValue measure_diagonal(const Circuit& circuit, const PauliSum& observable, const Backend& backend,
                               bool mitigate, std::uint64_t seed);

}  // namespace zpqe
