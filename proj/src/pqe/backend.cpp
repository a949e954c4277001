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

#include "zpqe/pqe/backend.hpp"

#include <stdexcept>
#include <string>

#include "zpqe/circuit/folding.hpp"

namespace zpqe {

std::string_view scope_name(MitigationScope scope) {
    return scope == MitigationScope::AllDiagonals ? "all" : "energy_only";
}

MitigationScope parse_scope(std::string_view name) {
    if (name == "all") return MitigationScope::AllDiagonals;
    if (name == "energy_only") return MitigationScope::EnergyOnly;
    throw std::invalid_argument("unknown mitigation scope '" + std::string(name) + "'");
}

void Backend::validate() const {
    noise.validate();
    if (shots.shots > 0 && shots.repeats == 0) throw std::invalid_argument("repeats must be >= 1");
    if (zne) zne->validate();
}

DiagonalValue measure_diagonal(const Circuit& circuit, const PauliSum& observable, const Backend& backend,
                               bool mitigate, std::uint64_t seed) {
    const Circuit physical = transpile(circuit);
    DiagonalValue out;
    if (mitigate && backend.zne) {
        FitResult fit = zne_expectation(physical, observable, *backend.zne, backend.noise, backend.shots, seed);
        out.value = fit.zero_noise_value;
        out.points = fit.points;
        out.fit = std::move(fit);
    } else {
        const NoisePoint p =
            measure_at_scale(physical, observable, backend.noise, 1.0, FoldMode::LocalAll, backend.shots, seed);
        out.value = p.value;
        out.points = {p};
    }
    return out;
}

}  // namespace zpqe
