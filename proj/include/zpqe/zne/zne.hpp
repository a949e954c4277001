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
#include <optional>
#include <vector>

#include "zpqe/circuit/folding.hpp"
#include "zpqe/operator/pauli.hpp"
#include "zpqe/sim/noise_model.hpp"
#include "zpqe/zne/extrapolation.hpp"

namespace zpqe {

struct ZneConfig {
    std::vector<double> schedule{1.0, 2.0, 3.0};
    ExtrapolationModel model = ExtrapolationModel::Richardson;
    std::optional<double> asymptote;  // required by the adaptive model
    std::size_t max_adaptive_nodes = 5;
    double lambda_max = kDefaultLambdaMax;
    FoldMode fold_mode = FoldMode::LocalRandom;

    /// Throws std::invalid_argument unless the schedule starts at 1 and increases strictly.
    void validate() const;
};

struct ShotConfig {
    std::size_t shots = 8192;  // 0 selects the exact readout-distorted value
    std::size_t repeats = 5;
};

/// Folds `circuit` to `lambda`, simulates it once and averages `repeats` shot estimates.
/// The fold selection seed and the sampling seed both derive from `seed`.
NoisePoint measure_at_scale(const Circuit& circuit, const PauliSum& observable, const NoiseModel& noise,
                            double lambda, FoldMode mode, const ShotConfig& shots, std::uint64_t seed);

/// Fold, measure and extrapolate to zero noise. `circuit` should already be in the basis gate set.
FitResult zne_expectation(const Circuit& circuit, const PauliSum& observable, const ZneConfig& config,
                          const NoiseModel& noise, const ShotConfig& shots, std::uint64_t seed);

}  // namespace zpqe
