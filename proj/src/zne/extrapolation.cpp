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

#include "zpqe/zne/extrapolation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>

namespace zpqe {

namespace {

constexpr double kDuplicateTolerance = 1e-12;
constexpr double kMaxDecayRate = 50.0;

void check_distinct(std::span<const double> nodes) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            if (std::abs(nodes[i] - nodes[j]) < kDuplicateTolerance) {
                std::ostringstream os;
                os << "duplicate noise node " << nodes[i];
                throw std::invalid_argument(os.str());
            }
        }
    }
}

std::vector<double> lambdas_of(std::span<const NoisePoint> points) {
    std::vector<double> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(p.lambda);
    return out;
}

void check_finite(std::span<const NoisePoint> points) {
    for (const auto& p : points) {
        if (!std::isfinite(p.lambda) || !std::isfinite(p.value)) {
            throw std::invalid_argument("noise points must be finite");
        }
    }
}

bool all_identical(std::span<const NoisePoint> points) {
    return std::all_of(points.begin(), points.end(), [&](const NoisePoint& p) {
        return std::abs(p.lambda - points.front().lambda) < kDuplicateTolerance;
    });
}

struct LinearSolve {
    double c0 = 0.0;
    double c1 = 0.0;
    double cost = 0.0;
};

// Least squares for c0 + c1 * basis(lambda) with a rank-revealing QR so a
// degenerate basis still yields a minimum-norm answer.
LinearSolve solve_two_column(std::span<const NoisePoint> points, double c2) {
    const auto n = static_cast<Eigen::Index>(points.size());
    Eigen::MatrixXd a(n, 2);
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        a(i, 0) = 1.0;
        a(i, 1) = std::exp(-c2 * points[static_cast<std::size_t>(i)].lambda);
        y(i) = points[static_cast<std::size_t>(i)].value;
    }
    const Eigen::Vector2d c = a.completeOrthogonalDecomposition().solve(y);
    return {c(0), c(1), (a * c - y).squaredNorm()};
}

double model_cost(std::span<const NoisePoint> points, const Eigen::Vector3d& p) {
    double cost = 0.0;
    for (const auto& pt : points) {
        const double r = p(0) + p(1) * std::exp(-p(2) * pt.lambda) - pt.value;
        cost += r * r;
    }
    return cost;
}

// Profile the cost over the decay rate with c0, c1 eliminated in closed form.
double profile_decay_rate(std::span<const NoisePoint> points) {
    std::vector<double> grid;
    for (int k = -60; k <= 60; ++k) {
        if (k == 0) continue;
        const double mag = std::pow(10.0, -3.0 + 4.5 * (std::abs(k) - 1) / 59.0);
        grid.push_back(k < 0 ? -std::min(mag, kMaxDecayRate) : std::min(mag, kMaxDecayRate));
    }
    std::sort(grid.begin(), grid.end());
    std::size_t best = 0;
    double best_cost = solve_two_column(points, grid[0]).cost;
    for (std::size_t k = 1; k < grid.size(); ++k) {
        const double c = solve_two_column(points, grid[k]).cost;
        if (c < best_cost) {
            best_cost = c;
            best = k;
        }
    }
    // golden-section refinement between the neighbours of the best grid point
    double lo = grid[best == 0 ? 0 : best - 1];
    double hi = grid[std::min(best + 1, grid.size() - 1)];
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - ratio * (hi - lo);
    double x2 = lo + ratio * (hi - lo);
    double f1 = solve_two_column(points, x1).cost;
    double f2 = solve_two_column(points, x2).cost;
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = solve_two_column(points, x1).cost;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = solve_two_column(points, x2).cost;
        }
    }
    return 0.5 * (lo + hi);
}

FitResult fit_fixed_asymptote(std::span<const NoisePoint> points, double c0) {
    if (points.size() < 2) throw std::invalid_argument("exponential fit with fixed asymptote needs >= 2 points");
    if (all_identical(points)) throw std::invalid_argument("exponential fit needs distinct noise scales");
    const double first = points.front().value - c0;
    for (const auto& p : points) {
        const double shifted = p.value - c0;
        if (shifted == 0.0 || std::signbit(shifted) != std::signbit(first)) {
            std::ostringstream os;
            os << "data crosses the asymptote " << c0 << " (value " << p.value << " at lambda " << p.lambda
               << "); exponential model is inconsistent with the data";
            throw FitError(os.str());
        }
    }
    const double sign = first > 0 ? 1.0 : -1.0;
    const auto n = static_cast<Eigen::Index>(points.size());
    Eigen::MatrixXd a(n, 2);
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& p = points[static_cast<std::size_t>(i)];
        a(i, 0) = 1.0;
        a(i, 1) = -p.lambda;
        y(i) = std::log(sign * (p.value - c0));
    }
    const Eigen::Vector2d sol = a.colPivHouseholderQr().solve(y);
    const double c1 = sign * std::exp(sol(0));
    const double c2 = sol(1);

    FitResult r;
    r.model = ExtrapolationModel::Exponential;
    r.params = {c0, c1, c2};
    r.zero_noise_value = c0 + c1;
    r.points.assign(points.begin(), points.end());
    return r;
}

FitResult fit_free_asymptote(std::span<const NoisePoint> points) {
    if (points.size() < 3) throw std::invalid_argument("exponential fit needs >= 3 points");
    check_distinct(lambdas_of(points));

    const double c2_start = profile_decay_rate(points);
    const LinearSolve start = solve_two_column(points, c2_start);
    Eigen::Vector3d p(start.c0, start.c1, c2_start);
    double cost = model_cost(points, p);
    double damping = 1e-3;

    const auto n = static_cast<Eigen::Index>(points.size());
    int it = 0;
    bool converged = false;
    for (; it < kExponentialMaxIterations; ++it) {
        Eigen::MatrixXd jac(n, 3);
        Eigen::VectorXd res(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            const double lam = points[static_cast<std::size_t>(i)].lambda;
            const double e = std::exp(-p(2) * lam);
            jac(i, 0) = 1.0;
            jac(i, 1) = e;
            jac(i, 2) = -p(1) * lam * e;
            res(i) = p(0) + p(1) * e - points[static_cast<std::size_t>(i)].value;
        }
        const Eigen::Matrix3d jtj = jac.transpose() * jac;
        const Eigen::Vector3d grad = jac.transpose() * res;
        const double scale = std::max(jtj.trace(), 1e-300);

        bool accepted = false;
        Eigen::Vector3d step = Eigen::Vector3d::Zero();
        for (int tries = 0; tries < 30 && !accepted; ++tries) {
            Eigen::Matrix3d lhs = jtj;
            for (int d = 0; d < 3; ++d) lhs(d, d) += damping * std::max(jtj(d, d), 1e-12 * scale);
            step = -lhs.ldlt().solve(grad);
            Eigen::Vector3d trial = p + step;
            trial(2) = std::clamp(trial(2), -kMaxDecayRate, kMaxDecayRate);
            step = trial - p;
            const double trial_cost = model_cost(points, trial);
            if (trial_cost <= cost) {
                p = trial;
                cost = trial_cost;
                damping = std::max(damping / 10.0, 1e-12);
                accepted = true;
            } else {
                damping *= 10.0;
            }
        }
        if (step.norm() <= kExponentialStepTolerance * (p.norm() + kExponentialStepTolerance)) {
            converged = true;
            break;
        }
        if (!accepted) {
            converged = cost <= 1e-28;
            break;
        }
    }
    if (!converged) {
        std::ostringstream os;
        os << "exponential fit did not converge after " << it << " iterations (residual sum of squares " << cost
           << ", c2 = " << p(2) << ")";
        throw FitError(os.str());
    }

    FitResult r;
    r.model = ExtrapolationModel::Exponential;
    r.params = {p(0), p(1), p(2)};
    r.zero_noise_value = p(0) + p(1);
    r.points.assign(points.begin(), points.end());
    r.iterations = it;
    return r;
}

}  // namespace

std::string_view model_name(ExtrapolationModel model) {
    switch (model) {
        case ExtrapolationModel::Linear: return "linear";
        case ExtrapolationModel::Richardson: return "richardson";
        case ExtrapolationModel::Exponential: return "exponential";
        case ExtrapolationModel::AdaptiveExponential: return "adaptive_exponential";
    }
    return "?";
}

ExtrapolationModel parse_model(std::string_view name) {
    if (name == "linear") return ExtrapolationModel::Linear;
    if (name == "richardson") return ExtrapolationModel::Richardson;
    if (name == "exponential") return ExtrapolationModel::Exponential;
    if (name == "adaptive_exponential" || name == "adaptive") return ExtrapolationModel::AdaptiveExponential;
    throw std::invalid_argument("unknown extrapolation model '" + std::string(name) + "'");
}

std::vector<double> richardson_coefficients(std::span<const double> nodes) {
    if (nodes.empty()) throw std::invalid_argument("Richardson extrapolation needs at least one node");
    check_distinct(nodes);
    std::vector<double> gamma(nodes.size(), 1.0);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (j != i) gamma[i] *= nodes[j] / (nodes[j] - nodes[i]);
        }
    }
    return gamma;
}

FitResult richardson_extrapolate(std::span<const NoisePoint> points) {
    if (points.size() < 2) throw std::invalid_argument("Richardson extrapolation needs >= 2 nodes");
    check_finite(points);
    const std::vector<double> gamma = richardson_coefficients(lambdas_of(points));
    FitResult r;
    r.model = ExtrapolationModel::Richardson;
    double spread = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        r.zero_noise_value += gamma[i] * points[i].value;
        spread += std::abs(gamma[i]);
    }
    r.gammas = gamma;
    r.spread_bound = spread;
    r.points.assign(points.begin(), points.end());
    return r;
}

FitResult linear_extrapolate(std::span<const NoisePoint> points) {
    if (points.size() < 2) throw std::invalid_argument("linear extrapolation needs >= 2 points");
    check_finite(points);
    if (all_identical(points)) throw std::invalid_argument("linear extrapolation needs distinct noise scales");
    const double n = static_cast<double>(points.size());
    double mx = 0.0, my = 0.0;
    for (const auto& p : points) {
        mx += p.lambda;
        my += p.value;
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& p : points) {
        sxx += (p.lambda - mx) * (p.lambda - mx);
        sxy += (p.lambda - mx) * (p.value - my);
    }
    const double c1 = sxy / sxx;
    const double c0 = my - c1 * mx;
    FitResult r;
    r.model = ExtrapolationModel::Linear;
    r.params = {c0, c1};
    r.zero_noise_value = c0;
    r.points.assign(points.begin(), points.end());
    return r;
}

FitResult exponential_fit(std::span<const NoisePoint> points, std::optional<double> asymptote) {
    check_finite(points);
    if (asymptote) {
        if (!std::isfinite(*asymptote)) throw std::invalid_argument("asymptote must be finite");
        return fit_fixed_asymptote(points, *asymptote);
    }
    return fit_free_asymptote(points);
}

FitResult extrapolate(ExtrapolationModel model, std::span<const NoisePoint> points, std::optional<double> asymptote) {
    switch (model) {
        case ExtrapolationModel::Linear: return linear_extrapolate(points);
        case ExtrapolationModel::Richardson: return richardson_extrapolate(points);
        case ExtrapolationModel::Exponential: return exponential_fit(points, asymptote);
        case ExtrapolationModel::AdaptiveExponential:
            throw std::invalid_argument("adaptive exponential chooses its own nodes; use the adaptive driver");
    }
    throw std::invalid_argument("unknown extrapolation model");
}

}  // namespace zpqe
