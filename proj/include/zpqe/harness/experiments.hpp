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
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "zpqe/harness/config.hpp"
#include "zpqe/operator/hamiltonian_io.hpp"
#include "zpqe/pqe/solver.hpp"

namespace zpqe {

struct RunRecord {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    Trajectory trajectory;
    double wall_seconds = 0.0;

    bool completed() const { return trajectory.status != TrajectoryStatus::Aborted && !trajectory.states.empty(); }
};

struct SummaryRow {
    std::size_t iteration = 0;
    std::size_t runs = 0;
    double energy_mean = 0.0;
    double energy_std = 0.0;
    double abs_error_mean = 0.0;
    double abs_error_std = 0.0;
    double residue_norm_mean = 0.0;
    double residue_norm_std = 0.0;
};

/// Per-iteration statistics over completed runs. Runs that stopped early
/// contribute their final state to later iterations.
std::vector<SummaryRow> summarize(const std::vector<RunRecord>& runs, double exact_energy);

struct EnsembleResult {
    std::string variant;
    std::vector<RunRecord> runs;
    std::vector<SummaryRow> summary;
    std::size_t failures = 0;
};

struct TrajectoryReport {
    double exact_energy = 0.0;
    std::vector<EnsembleResult> variants;  // primary first
    bool too_many_failures = false;        // more than 20% of a variant's runs aborted
};

/// Runs `ensemble` independent solves with seeds seed + i and writes per-run CSVs,
/// one summary CSV per variant and a manifest under cfg.out.
TrajectoryReport run_trajectory(const ExperimentConfig& cfg, std::ostream& log);

struct DemoModelStats {
    ExtrapolationModel model = ExtrapolationModel::Richardson;
    std::vector<double> estimates;  // one per successful run
    std::size_t failures = 0;
    double mean = 0.0;
    double std = 0.0;
    double abs_error_mean = 0.0;  // mean over runs of |D(0) - exact|
};

struct DemoReport {
    double exact_value = 0.0;  // noiseless energy term at the demo parameters
    std::vector<NoisePoint> node_means;  // schedule nodes: mean value and spread across runs
    std::vector<DemoModelStats> models;
};

/// Energy-term extrapolation at fixed parameters, repeated over the ensemble.
DemoReport run_extrapolation_demo(const ExperimentConfig& cfg, std::ostream& log);

struct LandscapeRow {
    double value = 0.0;
    SweepPoint noiseless;
    SweepPoint unmitigated;
    SweepPoint mitigated;
};

struct LandscapeReport {
    std::vector<double> theta_base;
    std::vector<LandscapeRow> rows;
};

/// Residue-norm sweep of one parameter for the noiseless, unmitigated and ZNE backends.
LandscapeReport run_residue_landscape(const ExperimentConfig& cfg, std::ostream& log);

/// Dense ground-state energy of the configured Hamiltonian; also writes exact.csv.
double run_exact_reference(const ExperimentConfig& cfg, std::ostream& log);

/// Noiseless, exact-trace converged parameters for `h`.
std::vector<double> noiseless_optimum(const MolecularHamiltonian& h, const ExperimentConfig& cfg);

}  // namespace zpqe
