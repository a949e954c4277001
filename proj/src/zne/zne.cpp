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

#include "zpqe/zne/zne.hpp"

#include <cmath>
#include <stdexcept>

#include "zpqe/common/seed.hpp"
#include "zpqe/common/stats.hpp"
#include "zpqe/sim/simulator.hpp"

namespace zpqe {

void ZneConfig::validate() const {
    if (model != ExtrapolationModel::AdaptiveExponential) {
        if (schedule.empty() || schedule.front() != 1.0) {
            throw std::invalid_argument("noise schedule must start at lambda = 1");
        }
        for (std::size_t k = 1; k < schedule.size(); ++k) {
            if (!(schedule[k] > schedule[k - 1])) throw std::invalid_argument("noise schedule must increase strictly");
        }
        if (schedule.size() < 2) throw std::invalid_argument("noise schedule needs at least two nodes");
        if (model == ExtrapolationModel::Exponential && !asymptote && schedule.size() < 3) {
            throw std::invalid_argument("exponential model needs at least three nodes");
        }
    } else {
        if (!asymptote) throw std::invalid_argument("adaptive exponential model needs an asymptote");
        if (max_adaptive_nodes < 2) throw std::invalid_argument("adaptive model needs at least two nodes");
    }
    if (!(lambda_max > 1.0)) throw std::invalid_argument("lambda_max must exceed 1");
}

NoisePoint measure_at_scale(const Circuit& circuit, const PauliSum& observable, const NoiseModel& noise,
                            double lambda, FoldMode mode, const ShotConfig& shots, std::uint64_t seed) {
    const FoldedCircuit folded = fold(circuit, {lambda, mode, derive_seed(seed, {0})});
    const DensityMatrix rho = simulate(folded.circuit, noise);
    const ObservableEstimator estimator(rho, observable, noise);

    NoisePoint p;
    p.requested_lambda = lambda;
    p.lambda = folded.achieved_lambda;
    if (shots.shots == 0) {
        p.value = estimator.exact();
        return p;
    }
    Rng rng(derive_seed(seed, {1}));
    std::vector<double> samples;
    const std::size_t repeats = std::max<std::size_t>(shots.repeats, 1);
    samples.reserve(repeats);
    for (std::size_t r = 0; r < repeats; ++r) samples.push_back(estimator.sample(shots.shots, rng));
    const MeanStd s = mean_std(samples);
    p.value = s.mean;
    p.std = s.std;
    return p;
}

FitResult zne_expectation(const Circuit& circuit, const PauliSum& observable, const ZneConfig& config,
                          const NoiseModel& noise, const ShotConfig& shots, std::uint64_t seed) {
    config.validate();
    if (config.model == ExtrapolationModel::AdaptiveExponential) {
        std::uint64_t node = 0;
        const NoiseEvaluator evaluator = [&](double lambda) {
            return measure_at_scale(circuit, observable, noise, lambda, config.fold_mode, shots,
                                    derive_seed(seed, {node++}));
        };
        return adaptive_exponential_extrapolate(
            evaluator, {*config.asymptote, config.max_adaptive_nodes, config.lambda_max, 1.0});
    }
    std::vector<NoisePoint> points;
    points.reserve(config.schedule.size());
    for (std::size_t k = 0; k < config.schedule.size(); ++k) {
        points.push_back(measure_at_scale(circuit, observable, noise, config.schedule[k], config.fold_mode, shots,
                                          derive_seed(seed, {k})));
    }
    return extrapolate(config.model, points, config.asymptote);
}

}  // namespace zpqe
