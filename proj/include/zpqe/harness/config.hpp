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
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zpqe/pqe/backend.hpp"
#include "zpqe/pqe/solver.hpp"
#include "zpqe/zne/zne.hpp"

namespace zpqe {

enum class ExperimentMode { Trajectory, ExtrapolationDemo, ResidueLandscape, ExactReference };

std::string_view mode_name(ExperimentMode mode);
ExperimentMode parse_mode(std::string_view name);

/// Raised for configuration problems the CLI reports as usage errors.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    ExperimentMode mode = ExperimentMode::Trajectory;
    std::filesystem::path hamiltonian;
    std::string noise = "nisq-light";  // preset name or INI path
    std::filesystem::path out = "out";
    std::uint64_t seed = 0;
    std::size_t ensemble = 50;
    std::size_t jobs = 1;
    bool baselines = false;  // trajectory mode: also run noiseless and unmitigated variants

    // solver
    double threshold = 1e-5;
    std::size_t max_iterations = 50;
    std::size_t shots = 8192;
    std::size_t repeats = 5;
    double denominator_floor = kDefaultDenominatorFloor;

    // mitigation
    bool mitigate = false;
    ZneConfig zne;
    MitigationScope scope = MitigationScope::AllDiagonals;

    // extrapolation demo
    std::vector<double> demo_theta{0.1, 0.1, 0.1};
    std::vector<ExtrapolationModel> demo_models{ExtrapolationModel::Linear, ExtrapolationModel::Richardson,
                                                ExtrapolationModel::AdaptiveExponential};

    // residue landscape
    std::size_t sweep_index = 0;
    std::vector<double> sweep_grid;  // empty selects 25 points on [-0.6, 0.6] around the noiseless optimum
    std::size_t sweep_evaluations = 50;
    std::vector<double> sweep_theta;  // empty selects the noiseless optimum

    /// Throws ConfigError on inconsistent settings or missing files.
    void validate() const;

    Backend backend() const;

    /// Canonical INI text; parsing it back yields an equal configuration.
    std::string to_ini() const;
    /// FNV-1a hash of to_ini(), as 16 hex digits.
    std::string hash() const;
};

ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::filesystem::path& path);

/// "1,2,3" -> {1, 2, 3}; "a:b:n" -> n evenly spaced values from a to b.
std::vector<double> parse_number_list(std::string_view text);

}  // namespace zpqe
