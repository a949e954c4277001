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
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "zpqe/circuit/compile.hpp"
#include "zpqe/operator/excitation.hpp"
#include "zpqe/operator/pauli.hpp"
#include "zpqe/pqe/backend.hpp"

namespace zpqe {

struct DiagonalTriple {
    DiagonalValue superposition;  // (|Phi_o> + |Phi_mu>)/sqrt(2) after U(theta)
    DiagonalValue excited;        // |Phi_mu> after U(theta)
    DiagonalValue reference;      // |Phi_o> after U(theta): the energy term

    double superposition_value() const { return superposition.value; }
    double excited_value() const { return excited.value; }
    double reference_value() const { return reference.value; }
};

/// residue = superposition - excited / 2 - reference / 2.
double compute_residue(double superposition, double excited, double reference);
inline double compute_residue(const DiagonalTriple& t) {
    return compute_residue(t.superposition_value(), t.excited_value(), t.reference_value());
}

/// theta_mu + r_mu / Delta_mu elementwise. Throws std::domain_error when |Delta| is below `floor`.
std::vector<double> quasi_newton_update(std::span<const double> theta, std::span<const double> residues,
                                        std::span<const double> denominators,
                                        double floor = kDefaultDenominatorFloor);

double residue_norm(std::span<const double> residues);

struct SolverConfig {
    double threshold = 1e-5;
    std::size_t max_iterations = 50;
    double denominator_floor = kDefaultDenominatorFloor;
    double residue_abort = 10.0;  // Hartree
    Backend backend;

    void validate() const;
};

struct PqeState {
    std::size_t iteration = 0;
    std::vector<double> theta;
    std::vector<double> residues;
    double energy = 0.0;
    double residue_norm = 0.0;
    std::vector<DiagonalTriple> diagonals;  // per pool index; the energy term is shared
};

enum class TrajectoryStatus { Converged, MaxIterations, Aborted };

std::string_view status_name(TrajectoryStatus status);

struct Trajectory {
    std::vector<PqeState> states;
    TrajectoryStatus status = TrajectoryStatus::MaxIterations;
    std::string diagnostic;  // why the run aborted

    bool converged() const { return status == TrajectoryStatus::Converged; }
    /// Throws std::logic_error when the run aborted before its first record.
    const PqeState& final_state() const {
        if (states.empty()) throw std::logic_error("trajectory has no recorded iterations");
        return states.back();
    }
};

struct SweepPoint {
    double value = 0.0;
    double mean_norm = 0.0;
    double std_norm = 0.0;
    std::size_t failures = 0;
};

class PqeSolver {
  public:
    PqeSolver(PauliSum hamiltonian, ReferenceState reference, std::vector<double> orbital_energies,
              SolverConfig config);

    const DuccAnsatz& ansatz() const { return ansatz_; }
    const SolverConfig& config() const { return config_; }
    std::size_t num_parameters() const { return ansatz_.num_parameters(); }
    const std::vector<double>& denominators() const { return denominators_; }

    /// The three diagonal terms for excitation `mu` at theta. Seeds derive from `seed` and mu.
    DiagonalTriple measure_diagonal_terms(std::span<const double> theta, std::size_t mu, std::uint64_t seed) const;

    /// The energy term (mitigated when the backend says so).
    DiagonalValue compute_energy(std::span<const double> theta, std::uint64_t seed) const;

    /// All residues with one shared energy measurement.
    std::vector<DiagonalTriple> measure_all(std::span<const double> theta, std::uint64_t seed) const;

    /// Iterates from theta = 0 (or `initial`) until the residue norm drops below the threshold.
    Trajectory solve(std::uint64_t seed, std::span<const double> initial = {}) const;

    /// Residue norm statistics while one parameter scans `grid` and the rest stay at `theta_base`.
    std::vector<SweepPoint> residue_norm_sweep(std::span<const double> theta_base, std::size_t param_index,
                                               std::span<const double> grid, std::size_t evaluations,
                                               std::uint64_t seed) const;

  private:
    DiagonalValue measure(const Circuit& c, bool is_energy, std::uint64_t seed) const;

    PauliSum hamiltonian_;
    SolverConfig config_;
    DuccAnsatz ansatz_;
    std::vector<double> denominators_;
};

}  // namespace zpqe
