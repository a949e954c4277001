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
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zpqe {

/// A diagonal term measured at one noise scale.
struct NoisePoint {
    double lambda = 1.0;  // achieved scale used by the fits
    double value = 0.0;
    double std = 0.0;  // spread over repeats
    double requested_lambda = 1.0;
};

enum class ExtrapolationModel { Linear, Richardson, Exponential, AdaptiveExponential };

std::string_view model_name(ExtrapolationModel model);
/// Accepts "linear", "richardson", "exponential", "adaptive_exponential" (also "adaptive").
ExtrapolationModel parse_model(std::string_view name);

struct FitResult {
    double zero_noise_value = 0.0;
    ExtrapolationModel model = ExtrapolationModel::Richardson;
    std::vector<double> params;  // linear: c0, c1; exponential: c0, c1, c2
    std::optional<std::vector<double>> gammas;
    std::optional<double> spread_bound;
    std::vector<NoisePoint> points;
    int iterations = 0;  // nonlinear solver steps, 0 for closed forms
};

/// Raised when a model cannot describe the data (sign guard, solver failure).
class FitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Lagrange weights of the interpolating polynomial evaluated at zero.
std::vector<double> richardson_coefficients(std::span<const double> nodes);

FitResult richardson_extrapolate(std::span<const NoisePoint> points);

FitResult linear_extrapolate(std::span<const NoisePoint> points);

inline constexpr int kExponentialMaxIterations = 100;
inline constexpr double kExponentialStepTolerance = 1e-10;

/// D(lambda) = c0 + c1 exp(-c2 lambda). With a fixed asymptote only c1 and c2 are fitted.
FitResult exponential_fit(std::span<const NoisePoint> points, std::optional<double> asymptote = std::nullopt);

inline constexpr double kAdaptiveAlpha = 1.27846;
inline constexpr double kAdaptiveMinStep = 0.1;
inline constexpr double kDefaultLambdaMax = 10.0;

/// Next node: lambda_j + alpha / |c2|, clamped to [lambda_j + 0.1, lambda_max].
double adaptive_next_lambda(double c2, double lambda_j, double lambda_max = kDefaultLambdaMax);

struct AdaptiveConfig {
    double asymptote = 0.0;
    std::size_t max_nodes = 5;
    double lambda_max = kDefaultLambdaMax;
    double initial_c2 = 1.0;
};

using NoiseEvaluator = std::function<NoisePoint(double requested_lambda)>;

FitResult adaptive_exponential_extrapolate(const NoiseEvaluator& evaluator, const AdaptiveConfig& config);

/// Dispatch for the three schedule-based models.
FitResult extrapolate(ExtrapolationModel model, std::span<const NoisePoint> points,
                      std::optional<double> asymptote = std::nullopt);

}  // namespace zpqe
