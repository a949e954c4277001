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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zpqe/zne/extrapolation.hpp"

namespace zpqe {

double adaptive_next_lambda(double c2, double lambda_j, double lambda_max) {
    if (!std::isfinite(c2) || std::abs(c2) < 1e-6) {
        std::ostringstream os;
        os << "adaptive step undefined for decay rate c2 = " << c2;
        throw std::domain_error(os.str());
    }
    // Nodes move towards stronger noise, so the step uses |c2|.
    const double next = std::max(lambda_j + kAdaptiveAlpha / std::abs(c2), lambda_j + kAdaptiveMinStep);
    return std::min(next, lambda_max);
}

FitResult adaptive_exponential_extrapolate(const NoiseEvaluator& evaluator, const AdaptiveConfig& config) {
    if (config.max_nodes < 2) throw std::invalid_argument("adaptive extrapolation needs max_nodes >= 2");
    if (!(config.lambda_max > 1.0)) throw std::invalid_argument("lambda_max must exceed 1");

    std::vector<NoisePoint> points;
    double c2 = config.initial_c2;
    double request = 1.0;
    while (points.size() < config.max_nodes) {
        const NoisePoint p = evaluator(request);
        if (!std::isfinite(p.value)) throw FitError("adaptive evaluator returned a non-finite value");
        points.push_back(p);
        if (points.size() >= 2) c2 = exponential_fit(points, config.asymptote).params[2];
        if (points.size() == config.max_nodes) break;
        // Flat data: the fit no longer depends on where the next node goes.
        if (points.size() >= 2 && std::abs(c2) < 1e-6) break;

        const double next = adaptive_next_lambda(c2, p.lambda, config.lambda_max);
        if (next <= p.lambda + 1e-9) break;  // already at the clamp ceiling
        request = next;
    }
    if (points.size() < 2) throw FitError("adaptive extrapolation collected fewer than 2 nodes");

    FitResult r = exponential_fit(points, config.asymptote);
    r.model = ExtrapolationModel::AdaptiveExponential;
    return r;
}

}  // namespace zpqe
