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

#include "zpqe/pqe/solver.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "zpqe/common/seed.hpp"
#include "zpqe/common/stats.hpp"

namespace zpqe {

namespace {

// Seed path tags for the three diagonal kinds.
constexpr std::uint64_t kEnergyTag = 0;
constexpr std::uint64_t kSuperpositionTag = 1;
constexpr std::uint64_t kExcitedTag = 2;

}  // namespace

double compute_residue(double superposition, double excited, double reference) { return superposition - 0.5 * excited - 0.5 * reference; }

std::vector<double> quasi_newton_update(std::span<const double> theta, std::span<const double> residues,
                                        std::span<const double> denominators, double floor) {
    if (residues.size() != theta.size() || denominators.size() != theta.size()) {
        throw std::invalid_argument("theta, residues and denominators must have equal length");
    }
    std::vector<double> next(theta.begin(), theta.end());
    for (std::size_t k = 0; k < next.size(); ++k) {
        if (!(std::abs(denominators[k]) >= floor)) {
            std::ostringstream os;
            os << "denominator " << denominators[k] << " for parameter " << k << " is below the floor " << floor;
            throw std::domain_error(os.str());
        }
        next[k] += residues[k] / denominators[k];
    }
    return next;
}

double residue_norm(std::span<const double> residues) {
    double s = 0.0;
    for (double r : residues) s += r * r;
    return std::sqrt(s);
}

std::string_view status_name(TrajectoryStatus status) {
    switch (status) {
        case TrajectoryStatus::Converged: return "converged";
        case TrajectoryStatus::MaxIterations: return "max_iterations";
        case TrajectoryStatus::Aborted: return "aborted";
    }
    return "?";
}

void SolverConfig::validate() const {
    if (!(threshold > 0.0)) throw std::invalid_argument("convergence threshold must be > 0");
    if (max_iterations == 0) throw std::invalid_argument("max_iterations must be >= 1");
    if (!(residue_abort > 0.0)) throw std::invalid_argument("residue abort level must be > 0");
    backend.validate();
}

PqeSolver::PqeSolver(PauliSum hamiltonian, ReferenceState reference, std::vector<double> orbital_energies,
                     SolverConfig config)
    : hamiltonian_(std::move(hamiltonian)),
      config_(std::move(config)),
      ansatz_(generate_ducc_sd_pool(reference, reference.num_qubits()), reference) {
    config_.validate();
    if (hamiltonian_.num_qubits() != reference.num_qubits()) {
        throw std::invalid_argument("Hamiltonian and reference widths differ");
    }
    if (!hamiltonian_.is_hermitian()) throw std::invalid_argument("Hamiltonian is not Hermitian");
    if (orbital_energies.size() != reference.num_qubits()) {
        throw std::invalid_argument("need one orbital energy per spin-orbital");
    }
    denominators_.reserve(ansatz_.num_parameters());
    for (const auto& mu : ansatz_.pool()) {
        denominators_.push_back(mp_denominator(mu, orbital_energies, config_.denominator_floor));
    }
}

DiagonalValue PqeSolver::measure(const Circuit& c, bool is_energy, std::uint64_t seed) const {
    const bool mitigate = is_energy || config_.backend.scope == MitigationScope::AllDiagonals;
    return measure_diagonal(c, hamiltonian_, config_.backend, mitigate, seed);
}

DiagonalValue PqeSolver::compute_energy(std::span<const double> theta, std::uint64_t seed) const {
    return measure(ansatz_.circuit(theta), true, derive_seed(seed, {kEnergyTag}));
}

DiagonalTriple PqeSolver::measure_diagonal_terms(std::span<const double> theta, std::size_t mu,
                                                 std::uint64_t seed) const {
    DiagonalTriple t;
    t.superposition = measure(ansatz_.superposition_circuit(theta, mu), false, derive_seed(seed, {kSuperpositionTag, mu}));
    t.excited = measure(ansatz_.excited_circuit(theta, mu), false, derive_seed(seed, {kExcitedTag, mu}));
    t.reference = compute_energy(theta, seed);
    return t;
}

std::vector<DiagonalTriple> PqeSolver::measure_all(std::span<const double> theta, std::uint64_t seed) const {
    const DiagonalValue energy = compute_energy(theta, seed);
    std::vector<DiagonalTriple> out(num_parameters());
    for (std::size_t mu = 0; mu < out.size(); ++mu) {
        out[mu].superposition = measure(ansatz_.superposition_circuit(theta, mu), false, derive_seed(seed, {kSuperpositionTag, mu}));
        out[mu].excited = measure(ansatz_.excited_circuit(theta, mu), false, derive_seed(seed, {kExcitedTag, mu}));
        out[mu].reference = energy;
    }
    return out;
}

Trajectory PqeSolver::solve(std::uint64_t seed, std::span<const double> initial) const {
    std::vector<double> theta(num_parameters(), 0.0);
    if (!initial.empty()) {
        if (initial.size() != theta.size()) throw std::invalid_argument("initial theta has the wrong length");
        theta.assign(initial.begin(), initial.end());
    }

    Trajectory traj;
    for (std::size_t it = 0; it < config_.max_iterations; ++it) {
        PqeState state;
        state.iteration = it;
        state.theta = theta;
        try {
            state.diagonals = measure_all(theta, derive_seed(seed, {it}));
        } catch (const std::exception& e) {
            traj.status = TrajectoryStatus::Aborted;
            traj.diagnostic = "iteration " + std::to_string(it) + ": " + e.what();
            return traj;
        }
        state.energy = state.diagonals.empty() ? compute_energy(theta, derive_seed(seed, {it})).value
                                               : state.diagonals.front().reference_value();
        for (const auto& d : state.diagonals) state.residues.push_back(compute_residue(d));
        state.residue_norm = residue_norm(state.residues);
        traj.states.push_back(state);

        for (std::size_t mu = 0; mu < state.residues.size(); ++mu) {
            const double r = state.residues[mu];
            if (!std::isfinite(r) || std::abs(r) > config_.residue_abort) {
                std::ostringstream os;
                os << "iteration " << it << ": residue " << mu << " = " << r << " is non-finite or exceeds "
                   << config_.residue_abort << " Ha";
                traj.status = TrajectoryStatus::Aborted;
                traj.diagnostic = os.str();
                return traj;
            }
        }
        if (!std::isfinite(state.energy)) {
            traj.status = TrajectoryStatus::Aborted;
            traj.diagnostic = "iteration " + std::to_string(it) + ": non-finite energy";
            return traj;
        }
        if (state.residue_norm < config_.threshold || std::isinf(config_.threshold)) {
            traj.status = TrajectoryStatus::Converged;
            return traj;
        }
        theta = quasi_newton_update(theta, state.residues, denominators_, config_.denominator_floor);
    }
    traj.status = TrajectoryStatus::MaxIterations;
    return traj;
}

std::vector<SweepPoint> PqeSolver::residue_norm_sweep(std::span<const double> theta_base, std::size_t param_index,
                                                      std::span<const double> grid, std::size_t evaluations,
                                                      std::uint64_t seed) const {
    if (param_index >= num_parameters()) throw std::out_of_range("sweep parameter index outside the pool");
    if (theta_base.size() != num_parameters()) throw std::invalid_argument("theta_base has the wrong length");
    if (evaluations == 0) throw std::invalid_argument("need at least one evaluation per grid point");
    std::vector<SweepPoint> out;
    for (std::size_t g = 0; g < grid.size(); ++g) {
        std::vector<double> theta(theta_base.begin(), theta_base.end());
        theta[param_index] = grid[g];
        std::vector<double> norms;
        SweepPoint p;
        p.value = grid[g];
        for (std::size_t e = 0; e < evaluations; ++e) {
            try {
                std::vector<double> r;
                for (const auto& d : measure_all(theta, derive_seed(seed, {g, e}))) r.push_back(compute_residue(d));
                norms.push_back(residue_norm(r));
            } catch (const FitError&) {
                ++p.failures;
            }
        }
        const MeanStd s = mean_std(norms);
        p.mean_norm = norms.empty() ? std::nan("") : s.mean;
        p.std_norm = s.std;
        out.push_back(p);
    }
    return out;
}

}  // namespace zpqe
