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

#include "zpqe/harness/validate.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "zpqe/circuit/compile.hpp"
#include "zpqe/circuit/folding.hpp"
#include "zpqe/harness/exact.hpp"
#include "zpqe/operator/hamiltonian_io.hpp"
#include "zpqe/pqe/solver.hpp"
#include "zpqe/sim/simulator.hpp"
#include "zpqe/zne/extrapolation.hpp"

namespace zpqe {

namespace {

std::string sci(double x) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

ValidationCheck check(std::string name, const std::function<std::string()>& body) {
    ValidationCheck c{std::move(name), true, ""};
    try {
        c.detail = body();
        if (c.detail.rfind("FAIL", 0) == 0) c.passed = false;
    } catch (const std::exception& e) {
        c.passed = false;
        c.detail = std::string("FAIL: ") + e.what();
    }
    return c;
}

std::string bound(double err, double tol) {
    return (err <= tol ? "max error " : "FAIL: max error ") + sci(err) + " (tolerance " + sci(tol) + ")";
}

}  // namespace

std::vector<ValidationCheck> run_validation(const std::filesystem::path& hamiltonian) {
    std::vector<ValidationCheck> out;

    out.push_back(check("pauli products match matrices", [] {
        std::mt19937_64 rng(7);
        const char letters[] = {'I', 'X', 'Y', 'Z'};
        double err = 0.0;
        for (int trial = 0; trial < 50; ++trial) {
            std::string a(3, 'I'), b(3, 'I');
            for (auto& ch : a) ch = letters[rng() % 4];
            for (auto& ch : b) ch = letters[rng() % 4];
            PauliSum pa(3), pb(3);
            pa.add(1.0, PauliString::parse(a));
            pb.add(1.0, PauliString::parse(b));
            err = std::max(err, ((pa * pb).to_matrix() - pa.to_matrix() * pb.to_matrix()).norm());
        }
        return bound(err, 1e-12);
    }));

    out.push_back(check("richardson weights reproduce polynomials", [] {
        const std::vector<double> nodes = {1.0, 2.0, 3.0};
        const auto w = richardson_coefficients(nodes);
        double sum = 0.0, moment1 = 0.0, moment2 = 0.0;
        for (std::size_t k = 0; k < w.size(); ++k) {
            sum += w[k];
            moment1 += w[k] * nodes[k];
            moment2 += w[k] * nodes[k] * nodes[k];
        }
        return bound(std::abs(sum - 1.0) + std::abs(moment1) + std::abs(moment2), 1e-12);
    }));

    if (hamiltonian.empty()) return out;

    const MolecularHamiltonian h = load_hamiltonian(hamiltonian);
    const Eigen::MatrixXcd hm = h.hamiltonian.to_matrix();

    out.push_back(check("hamiltonian is hermitian", [&] { return bound((hm - hm.adjoint()).norm(), 1e-12); }));

    if (const auto fci = h.meta("fci_energy")) {
        out.push_back(check("exact energy matches file metadata", [&] {
            return bound(std::abs(exact_ground_energy(h.hamiltonian) - std::stod(*fci)), 1e-8);
        }));
    }

    SolverConfig exact_cfg;
    exact_cfg.threshold = 1e-10;
    exact_cfg.max_iterations = 500;
    const PqeSolver solver(h.hamiltonian, h.reference, h.orbital_energies, exact_cfg);
    const DuccAnsatz& ansatz = solver.ansatz();
    const std::size_t m = ansatz.num_parameters();

    out.push_back(check("residue identity against dense algebra", [&] {
        std::vector<Eigen::MatrixXcd> generators;
        for (std::size_t mu = 0; mu < m; ++mu) generators.push_back(ansatz.generator(mu).to_matrix());
        Eigen::VectorXcd phi0 = Eigen::VectorXcd::Zero(hm.rows());
        phi0(static_cast<Eigen::Index>(h.reference.occupation())) = 1.0;
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
        double err = 0.0;
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<double> theta(m);
            for (auto& t : theta) t = u(rng);
            Eigen::MatrixXcd U = Eigen::MatrixXcd::Identity(hm.rows(), hm.cols());
            for (std::size_t k = 0; k < m; ++k) U = (theta[k] * generators[k]).exp() * U;
            const Eigen::MatrixXcd hbar = U.adjoint() * hm * U;
            const auto triples = solver.measure_all(theta, 0);
            for (std::size_t mu = 0; mu < m; ++mu) {
                const std::complex<double> r = (generators[mu] * phi0).dot(hbar * phi0);
                err = std::max(err, std::abs(compute_residue(triples[mu]) - r.real()) + std::abs(r.imag()));
            }
        }
        return bound(err, 1e-10);
    }));

    out.push_back(check("folding preserves the circuit unitary", [&] {
        const std::vector<double> theta(m, 0.1);
        const Circuit base = transpile(ansatz.circuit(theta));
        const Eigen::VectorXcd psi = simulate_statevector(base);
        double err = 0.0;
        for (double lambda : {1.0, 3.0, 5.0}) {
            const FoldedCircuit f = fold(base, {lambda, FoldMode::LocalRandom, 3});
            if (f.circuit.size() != static_cast<std::size_t>(lambda) * base.size()) {
                return std::string("FAIL: gate count ") + std::to_string(f.circuit.size()) + " at scale " +
                       std::to_string(lambda);
            }
            err = std::max(err, 1.0 - std::abs(psi.dot(simulate_statevector(f.circuit))));
        }
        return bound(err, 1e-10);
    }));

    out.push_back(check("noisy state is a valid density matrix", [&] {
        const std::vector<double> theta(m, 0.1);
        const Circuit folded = fold(transpile(ansatz.circuit(theta)), {3.0, FoldMode::LocalRandom, 5}).circuit;
        const DensityMatrix rho = simulate(folded, NoiseModel::from_spec("nisq-light"));
        const double err = std::abs(rho.trace() - 1.0) + rho.hermiticity_error() + std::max(0.0, -rho.min_eigenvalue());
        return bound(err, 1e-9);
    }));

    out.push_back(check("noiseless trajectory reaches the exact energy", [&] {
        const Trajectory t = solver.solve(0);
        if (!t.converged()) return std::string("FAIL: ") + std::string(status_name(t.status)) + " " + t.diagnostic;
        return bound(std::abs(t.final_state().energy - exact_ground_energy(h.hamiltonian)), 1e-6);
    }));

    return out;
}

}  // namespace zpqe
