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

#include "zpqe/harness/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include <Eigen/Core>
#include <boost/version.hpp>
#include <json.hpp>

#include "zpqe/common/seed.hpp"
#include "zpqe/circuit/compile.hpp"
#include "zpqe/circuit/folding.hpp"
#include "zpqe/common/stats.hpp"
#include "zpqe/harness/exact.hpp"
#include "zpqe/harness/output.hpp"

namespace zpqe {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Runs fn(0..n-1) on up to `jobs` threads; the first exception is rethrown after the join.
void parallel_for(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers = std::max<std::size_t>(1, std::min(jobs, n));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

std::string run_name(std::size_t index) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "run_%03zu", index);
    return buf;
}

nlohmann::json versions() {
    return {{"zne-pqe", "0.1.0"},
            {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                          std::to_string(EIGEN_MINOR_VERSION)},
            {"boost", BOOST_LIB_VERSION},
            {"compiler", __VERSION__}};
}

void write_manifest(const ExperimentConfig& cfg, nlohmann::json body, double wall) {
    body["mode"] = std::string(mode_name(cfg.mode));
    body["config_hash"] = cfg.hash();
    body["config"] = cfg.to_ini();
    body["versions"] = versions();
    body["wall_time_s"] = wall;
    write_file_atomic(cfg.out / "manifest.json", body.dump(2) + "\n");
}

SolverConfig solver_config(const ExperimentConfig& cfg, const Backend& backend) {
    SolverConfig s;
    s.threshold = cfg.threshold;
    s.max_iterations = cfg.max_iterations;
    s.denominator_floor = cfg.denominator_floor;
    s.backend = backend;
    return s;
}

std::string trajectory_csv(const Trajectory& t, std::size_t m) {
    std::vector<std::string> header = {"iteration", "energy", "residue_norm"};
    for (std::size_t k = 0; k < m; ++k) header.push_back("theta_" + std::to_string(k));
    for (std::size_t k = 0; k < m; ++k) header.push_back("residue_" + std::to_string(k));
    CsvTable table(header);
    for (const auto& s : t.states) {
        std::vector<std::string> row = {std::to_string(s.iteration), format_double(s.energy),
                                        format_double(s.residue_norm)};
        for (double x : s.theta) row.push_back(format_double(x));
        for (double x : s.residues) row.push_back(format_double(x));
        table.add_row(std::move(row));
    }
    return table.str();
}

void add_diagonal_rows(CsvTable& table, std::size_t iteration, const std::string& term, const std::string& mu,
                       const DiagonalValue& d) {
    for (std::size_t node = 0; node < d.points.size(); ++node) {
        const NoisePoint& p = d.points[node];
        std::string gamma, model = "none", spread;
        if (d.fit) {
            model = std::string(model_name(d.fit->model));
            if (d.fit->gammas) gamma = format_double((*d.fit->gammas)[node]);
            if (d.fit->spread_bound) spread = format_double(*d.fit->spread_bound);
        }
        table.add_row({std::to_string(iteration), term, mu, std::to_string(node), format_double(p.requested_lambda),
                       format_double(p.lambda), format_double(p.value), format_double(p.std), model,
                       format_double(d.value), gamma, spread});
    }
}

std::string diagonals_csv(const Trajectory& t) {
    CsvTable table({"iteration", "term", "excitation", "node", "lambda_requested", "lambda_achieved", "value", "std", "model",
                    "zero_noise_value", "gamma", "spread_bound"});
    for (const auto& s : t.states) {
        if (s.diagonals.empty()) continue;
        add_diagonal_rows(table, s.iteration, "o", "", s.diagonals.front().reference);
        for (std::size_t mu = 0; mu < s.diagonals.size(); ++mu) {
            add_diagonal_rows(table, s.iteration, "omega", std::to_string(mu), s.diagonals[mu].superposition);
            add_diagonal_rows(table, s.iteration, "mu", std::to_string(mu), s.diagonals[mu].excited);
        }
    }
    return table.str();
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
    CsvTable table({"iteration", "runs", "energy_mean", "energy_std", "abs_error_mean", "abs_error_std",
                    "residue_norm_mean", "residue_norm_std"});
    for (const auto& r : rows) {
        table.add_row({std::to_string(r.iteration), std::to_string(r.runs), format_double(r.energy_mean),
                       format_double(r.energy_std), format_double(r.abs_error_mean), format_double(r.abs_error_std),
                       format_double(r.residue_norm_mean), format_double(r.residue_norm_std)});
    }
    return table.str();
}

}  // namespace

std::vector<SummaryRow> summarize(const std::vector<RunRecord>& runs, double exact_energy) {
    std::size_t length = 0;
    for (const auto& r : runs) {
        if (r.completed()) length = std::max(length, r.trajectory.states.size());
    }
    std::vector<SummaryRow> out;
    for (std::size_t it = 0; it < length; ++it) {
        std::vector<double> e, err, norm;
        for (const auto& r : runs) {
            if (!r.completed()) continue;
            const auto& states = r.trajectory.states;
            const PqeState& s = states[std::min(it, states.size() - 1)];
            e.push_back(s.energy);
            err.push_back(std::abs(s.energy - exact_energy));
            norm.push_back(s.residue_norm);
        }
        const MeanStd me = mean_std(e), mr = mean_std(err), mn = mean_std(norm);
        out.push_back({it, e.size(), me.mean, me.std, mr.mean, mr.std, mn.mean, mn.std});
    }
    return out;
}

std::vector<double> noiseless_optimum(const MolecularHamiltonian& h, const ExperimentConfig& cfg) {
    SolverConfig s;
    s.threshold = std::min(cfg.threshold, 1e-10);
    s.max_iterations = 500;
    s.denominator_floor = cfg.denominator_floor;
    const PqeSolver solver(h.hamiltonian, h.reference, h.orbital_energies, s);
    const Trajectory t = solver.solve(cfg.seed);
    if (t.states.empty()) throw std::runtime_error("noiseless solve failed: " + t.diagnostic);
    return t.final_state().theta;
}

TrajectoryReport run_trajectory(const ExperimentConfig& cfg, std::ostream& log) {
    cfg.validate();
    const auto t0 = Clock::now();
    const MolecularHamiltonian h = load_hamiltonian(cfg.hamiltonian);

    TrajectoryReport report;
    report.exact_energy = exact_ground_energy(h.hamiltonian);

    struct Variant {
        std::string name;
        Backend backend;
        std::size_t ensemble;
    };
    std::vector<Variant> variants;
    const Backend primary = cfg.backend();
    variants.push_back({cfg.mitigate ? "zne_" + std::string(model_name(cfg.zne.model)) : "unmitigated", primary,
                        cfg.ensemble});
    if (cfg.baselines) {
        Backend ideal;
        variants.push_back({"noiseless", ideal, 1});
        if (cfg.mitigate) {
            Backend plain = primary;
            plain.zne.reset();
            variants.push_back({"unmitigated", plain, cfg.ensemble});
        }
    }

    nlohmann::json manifest;
    manifest["exact_energy"] = report.exact_energy;
    manifest["variants"] = nlohmann::json::array();
    for (const auto& v : variants) {
        const PqeSolver solver(h.hamiltonian, h.reference, h.orbital_energies, solver_config(cfg, v.backend));
        EnsembleResult result;
        result.variant = v.name;
        result.runs.resize(v.ensemble);
        std::mutex log_mutex;
        parallel_for(v.ensemble, cfg.jobs, [&](std::size_t i) {
            const auto start = Clock::now();
            RunRecord rec;
            rec.index = i;
            rec.seed = cfg.seed + i;
            rec.trajectory = solver.solve(rec.seed);
            rec.wall_seconds = seconds_since(start);

            const auto dir = cfg.out / v.name;
            write_file_atomic(dir / (run_name(i) + ".csv"), trajectory_csv(rec.trajectory, solver.num_parameters()));
            if (v.backend.zne) write_file_atomic(dir / (run_name(i) + "_diagonals.csv"), diagonals_csv(rec.trajectory));
            {
                std::lock_guard lock(log_mutex);
                log << v.name << " " << run_name(i) << ": " << status_name(rec.trajectory.status) << " after "
                    << rec.trajectory.states.size() << " iterations";
                if (!rec.trajectory.states.empty()) log << ", E = " << rec.trajectory.final_state().energy;
                if (!rec.trajectory.diagnostic.empty()) log << " (" << rec.trajectory.diagnostic << ")";
                log << '\n';
            }
            result.runs[i] = std::move(rec);
        });

        result.summary = summarize(result.runs, report.exact_energy);
        write_file_atomic(cfg.out / v.name / "summary.csv", summary_csv(result.summary));

        nlohmann::json runs = nlohmann::json::array();
        for (const auto& r : result.runs) {
            if (!r.completed()) ++result.failures;
            nlohmann::json j = {{"index", r.index},
                                {"seed", r.seed},
                                {"status", std::string(status_name(r.trajectory.status))},
                                {"iterations", r.trajectory.states.size()},
                                {"wall_time_s", r.wall_seconds}};
            if (!r.trajectory.states.empty()) {
                j["final_energy"] = r.trajectory.final_state().energy;
                j["final_residue_norm"] = r.trajectory.final_state().residue_norm;
            }
            if (!r.trajectory.diagnostic.empty()) j["diagnostic"] = r.trajectory.diagnostic;
            runs.push_back(std::move(j));
        }
        if (5 * result.failures > v.ensemble) report.too_many_failures = true;
        manifest["variants"].push_back({{"name", v.name}, {"failures", result.failures}, {"runs", std::move(runs)}});
        report.variants.push_back(std::move(result));
    }
    write_manifest(cfg, std::move(manifest), seconds_since(t0));
    return report;
}

DemoReport run_extrapolation_demo(const ExperimentConfig& cfg, std::ostream& log) {
    cfg.validate();
    const auto t0 = Clock::now();
    const MolecularHamiltonian h = load_hamiltonian(cfg.hamiltonian);
    const DuccAnsatz ansatz(generate_ducc_sd_pool(h.reference, h.n_qubits), h.reference);
    if (cfg.demo_theta.size() != ansatz.num_parameters()) {
        throw ConfigError("demo theta has " + std::to_string(cfg.demo_theta.size()) + " entries, the pool has " +
                          std::to_string(ansatz.num_parameters()));
    }
    const Circuit circuit = transpile(ansatz.circuit(cfg.demo_theta));
    const NoiseModel noise = NoiseModel::from_spec(cfg.noise);
    const ShotConfig shots{cfg.shots, cfg.repeats};

    DemoReport report;
    report.exact_value =
        measure_at_scale(circuit, h.hamiltonian, NoiseModel::ideal(), 1.0, FoldMode::LocalAll, {0, 1}, 0).value;

    struct RunOutput {
        std::vector<NoisePoint> schedule_points;
        std::vector<std::optional<FitResult>> fits;
        std::vector<std::string> errors;
    };
    std::vector<RunOutput> runs(cfg.ensemble);
    parallel_for(cfg.ensemble, cfg.jobs, [&](std::size_t i) {
        const std::uint64_t seed = cfg.seed + i;
        RunOutput& out = runs[i];
        for (std::size_t k = 0; k < cfg.zne.schedule.size(); ++k) {
            out.schedule_points.push_back(measure_at_scale(circuit, h.hamiltonian, noise, cfg.zne.schedule[k],
                                                           cfg.zne.fold_mode, shots, derive_seed(seed, {k})));
        }
        for (ExtrapolationModel m : cfg.demo_models) {
            try {
                if (m == ExtrapolationModel::AdaptiveExponential) {
                    ZneConfig z = cfg.zne;
                    z.model = m;
                    out.fits.push_back(zne_expectation(circuit, h.hamiltonian, z, noise, shots,
                                                       derive_seed(seed, {0xADA})));
                } else {
                    out.fits.push_back(extrapolate(m, out.schedule_points, cfg.zne.asymptote));
                }
                out.errors.emplace_back();
            } catch (const FitError& e) {
                out.fits.emplace_back();
                out.errors.emplace_back(e.what());
            }
        }
    });

    CsvTable points({"run", "source", "node", "lambda_requested", "lambda_achieved", "value", "std"});
    CsvTable fits({"run", "model", "status", "zero_noise_value", "abs_error", "params", "gammas", "spread_bound"});
    auto joined = [](const std::vector<double>& xs) {
        std::string s;
        for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? ";" : "") + format_double(xs[k]);
        return s;
    };
    for (std::size_t i = 0; i < runs.size(); ++i) {
        for (std::size_t k = 0; k < runs[i].schedule_points.size(); ++k) {
            const auto& p = runs[i].schedule_points[k];
            points.add_row({std::to_string(i), "schedule", std::to_string(k), format_double(p.requested_lambda),
                            format_double(p.lambda), format_double(p.value), format_double(p.std)});
        }
        for (std::size_t m = 0; m < cfg.demo_models.size(); ++m) {
            const std::string name(model_name(cfg.demo_models[m]));
            const auto& fit = runs[i].fits[m];
            if (!fit) {
                fits.add_row({std::to_string(i), name, "failed", "nan", "nan", "", "", ""});
                continue;
            }
            if (cfg.demo_models[m] == ExtrapolationModel::AdaptiveExponential) {
                for (std::size_t k = 0; k < fit->points.size(); ++k) {
                    const auto& p = fit->points[k];
                    points.add_row({std::to_string(i), "adaptive", std::to_string(k),
                                    format_double(p.requested_lambda), format_double(p.lambda),
                                    format_double(p.value), format_double(p.std)});
                }
            }
            fits.add_row({std::to_string(i), name, "ok", format_double(fit->zero_noise_value),
                          format_double(std::abs(fit->zero_noise_value - report.exact_value)), joined(fit->params),
                          fit->gammas ? joined(*fit->gammas) : "",
                          fit->spread_bound ? format_double(*fit->spread_bound) : ""});
        }
    }

    CsvTable nodes({"lambda_requested", "lambda_achieved_mean", "value_mean", "value_std", "runs"});
    for (std::size_t k = 0; k < cfg.zne.schedule.size(); ++k) {
        std::vector<double> lam, val;
        for (const auto& r : runs) {
            lam.push_back(r.schedule_points[k].lambda);
            val.push_back(r.schedule_points[k].value);
        }
        const MeanStd ml = mean_std(lam), mv = mean_std(val);
        report.node_means.push_back({ml.mean, mv.mean, mv.std, cfg.zne.schedule[k]});
        nodes.add_row({format_double(cfg.zne.schedule[k]), format_double(ml.mean), format_double(mv.mean),
                       format_double(mv.std), std::to_string(runs.size())});
    }

    CsvTable models({"model", "runs", "failures", "zero_noise_mean", "zero_noise_std", "abs_error_mean", "exact"});
    for (std::size_t m = 0; m < cfg.demo_models.size(); ++m) {
        DemoModelStats st;
        st.model = cfg.demo_models[m];
        std::vector<double> err;
        for (const auto& r : runs) {
            if (!r.fits[m]) {
                ++st.failures;
                continue;
            }
            st.estimates.push_back(r.fits[m]->zero_noise_value);
            err.push_back(std::abs(r.fits[m]->zero_noise_value - report.exact_value));
        }
        const MeanStd ms = mean_std(st.estimates);
        st.mean = st.estimates.empty() ? std::nan("") : ms.mean;
        st.std = ms.std;
        st.abs_error_mean = err.empty() ? std::nan("") : mean_std(err).mean;
        models.add_row({std::string(model_name(st.model)), std::to_string(st.estimates.size()),
                        std::to_string(st.failures), format_double(st.mean), format_double(st.std),
                        format_double(st.abs_error_mean), format_double(report.exact_value)});
        log << model_name(st.model) << ": D(0) = " << st.mean << " +- " << st.std << ", mean |error| "
            << st.abs_error_mean << " over " << st.estimates.size() << " runs";
        if (st.failures) log << " (" << st.failures << " fit failures)";
        log << '\n';
        report.models.push_back(std::move(st));
    }

    write_file_atomic(cfg.out / "demo_points.csv", points.str());
    write_file_atomic(cfg.out / "demo_fits.csv", fits.str());
    write_file_atomic(cfg.out / "demo_nodes.csv", nodes.str());
    write_file_atomic(cfg.out / "demo_models.csv", models.str());
    write_manifest(cfg, {{"exact_value", report.exact_value}}, seconds_since(t0));
    return report;
}

LandscapeReport run_residue_landscape(const ExperimentConfig& cfg, std::ostream& log) {
    cfg.validate();
    const auto t0 = Clock::now();
    const MolecularHamiltonian h = load_hamiltonian(cfg.hamiltonian);

    LandscapeReport report;
    report.theta_base = cfg.sweep_theta.empty() ? noiseless_optimum(h, cfg) : cfg.sweep_theta;
    if (cfg.sweep_index >= report.theta_base.size()) throw ConfigError("landscape parameter index outside the pool");
    std::vector<double> grid = cfg.sweep_grid;
    if (grid.empty()) {
        const double centre = report.theta_base[cfg.sweep_index];
        for (int k = -12; k <= 12; ++k) grid.push_back(centre + 0.05 * k);
    }

    Backend noiseless;
    Backend unmitigated = cfg.backend();
    unmitigated.zne.reset();
    Backend mitigated = unmitigated;
    mitigated.zne = cfg.zne;
    mitigated.scope = cfg.scope;

    const std::vector<std::pair<Backend, std::size_t>> variants = {
        {noiseless, 1}, {unmitigated, cfg.sweep_evaluations}, {mitigated, cfg.sweep_evaluations}};
    std::vector<std::vector<SweepPoint>> sweeps(variants.size());
    parallel_for(variants.size(), cfg.jobs, [&](std::size_t v) {
        const PqeSolver solver(h.hamiltonian, h.reference, h.orbital_energies, solver_config(cfg, variants[v].first));
        sweeps[v] = solver.residue_norm_sweep(report.theta_base, cfg.sweep_index, grid, variants[v].second,
                                              derive_seed(cfg.seed, {v}));
    });

    CsvTable table({"value", "noiseless_norm", "unmitigated_mean", "unmitigated_std", "zne_mean", "zne_std",
                    "zne_failures"});
    for (std::size_t g = 0; g < grid.size(); ++g) {
        LandscapeRow row{grid[g], sweeps[0][g], sweeps[1][g], sweeps[2][g]};
        table.add_row({format_double(row.value), format_double(row.noiseless.mean_norm),
                       format_double(row.unmitigated.mean_norm), format_double(row.unmitigated.std_norm),
                       format_double(row.mitigated.mean_norm), format_double(row.mitigated.std_norm),
                       std::to_string(row.mitigated.failures)});
        report.rows.push_back(row);
    }
    write_file_atomic(cfg.out / "landscape.csv", table.str());
    nlohmann::json body;
    body["theta_base"] = report.theta_base;
    body["param_index"] = cfg.sweep_index;
    write_manifest(cfg, std::move(body), seconds_since(t0));
    log << "landscape: " << grid.size() << " grid points written to " << (cfg.out / "landscape.csv").string() << '\n';
    return report;
}

double run_exact_reference(const ExperimentConfig& cfg, std::ostream& log) {
    if (cfg.hamiltonian.empty()) throw ConfigError("no Hamiltonian file given");
    if (!std::filesystem::exists(cfg.hamiltonian)) {
        throw ConfigError("Hamiltonian file not found: " + cfg.hamiltonian.string());
    }
    const auto t0 = Clock::now();
    const MolecularHamiltonian h = load_hamiltonian(cfg.hamiltonian);
    const double e = exact_ground_energy(h.hamiltonian);
    log << "exact ground energy: " << format_double(e) << " Ha\n";
    CsvTable table({"hamiltonian", "n_qubits", "exact_energy"});
    table.add_row({cfg.hamiltonian.filename().string(), std::to_string(h.n_qubits), format_double(e)});
    write_file_atomic(cfg.out / "exact.csv", table.str());
    write_manifest(cfg, {{"exact_energy", e}}, seconds_since(t0));
    return e;
}

}  // namespace zpqe
