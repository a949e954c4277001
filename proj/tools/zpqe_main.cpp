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

#include <exception>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "zpqe/harness/experiments.hpp"
#include "zpqe/harness/output.hpp"
#include "zpqe/harness/validate.hpp"
#include "zpqe/operator/hamiltonian_io.hpp"

namespace {

constexpr int kExitRunFailure = 1;
constexpr int kExitUsage = 2;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Projective quantum eigensolver with zero-noise extrapolation on a simulated noisy device"};
    app.set_version_flag("--version", "zpqe 0.1.0");

    std::string config_path, mode, hamiltonian, noise, mitigation, scope, model, schedule, fold_mode, out;
    double asymptote = 0.0, threshold = 0.0;
    std::size_t shots = 0, repeats = 0, ensemble = 0, max_iter = 0, jobs = 0;
    std::uint64_t seed = 0;
    bool baselines = false, validate = false;

    app.add_option("--config", config_path, "INI configuration file; flags override its values");
    app.add_option("--mode", mode, "trajectory | extrapolation_demo | residue_landscape | exact_reference");
    app.add_option("--hamiltonian", hamiltonian, "Qubit Hamiltonian file");
    app.add_option("--noise", noise, "Noise preset (none, nisq-light) or INI file");
    app.add_option("--mitigation", mitigation, "none, zne, or an extrapolation model name (implies zne)");
    app.add_option("--mitigation-scope", scope, "all | energy_only: which diagonal terms are extrapolated");
    app.add_option("--model", model, "linear | richardson | exponential | adaptive_exponential");
    app.add_option("--schedule", schedule, "Noise scale factors, e.g. 1,2,3 or 1:5:5");
    app.add_option("--asymptote", asymptote, "Fixed exponential asymptote");
    app.add_option("--fold-mode", fold_mode, "global | local_all | local_left | local_right | local_random");
    app.add_option("--shots", shots, "Shots per measurement (0 = exact readout-distorted value), default 8192");
    app.add_option("--repeats", repeats, "Measurements averaged per value, default 5");
    app.add_option("--ensemble", ensemble, "Independent runs, default 50");
    app.add_option("--seed", seed, "Base seed; run i uses seed + i");
    app.add_option("--threshold", threshold, "Residue norm convergence threshold, default 1e-5");
    app.add_option("--max-iter", max_iter, "Iteration cap, default 50");
    app.add_option("--jobs", jobs, "Parallel ensemble members");
    app.add_option("--out", out, "Output directory");
    app.add_flag("--baselines", baselines, "Trajectory mode: also run noiseless and unmitigated variants");
    app.add_flag("--validate", validate, "Run the invariant checks and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (validate) {
            if (!hamiltonian.empty() && !std::filesystem::exists(hamiltonian)) {
                std::cerr << "error: Hamiltonian file not found: " << hamiltonian << '\n';
                return kExitUsage;
            }
            bool ok = true;
            for (const auto& c : zpqe::run_validation(hamiltonian)) {
                std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
                ok = ok && c.passed;
            }
            return ok ? 0 : kExitRunFailure;
        }

        zpqe::ExperimentConfig cfg = config_path.empty() ? zpqe::ExperimentConfig{} : zpqe::load_config(config_path);
        if (app.count("--mode")) cfg.mode = zpqe::parse_mode(mode);
        if (app.count("--hamiltonian")) cfg.hamiltonian = hamiltonian;
        if (app.count("--noise")) cfg.noise = noise;
        if (app.count("--mitigation")) {
            if (mitigation == "none") {
                cfg.mitigate = false;
            } else if (mitigation == "zne") {
                cfg.mitigate = true;
            } else {
                cfg.mitigate = true;
                cfg.zne.model = zpqe::parse_model(mitigation);
            }
        }
        if (app.count("--mitigation-scope")) cfg.scope = zpqe::parse_scope(scope);
        if (app.count("--model")) cfg.zne.model = zpqe::parse_model(model);
        if (app.count("--schedule")) cfg.zne.schedule = zpqe::parse_number_list(schedule);
        if (app.count("--asymptote")) cfg.zne.asymptote = asymptote;
        if (app.count("--fold-mode")) cfg.zne.fold_mode = zpqe::parse_fold_mode(fold_mode);
        if (app.count("--shots")) cfg.shots = shots;
        if (app.count("--repeats")) cfg.repeats = repeats;
        if (app.count("--ensemble")) cfg.ensemble = ensemble;
        if (app.count("--seed")) cfg.seed = seed;
        if (app.count("--threshold")) cfg.threshold = threshold;
        if (app.count("--max-iter")) cfg.max_iterations = max_iter;
        if (app.count("--jobs")) cfg.jobs = jobs;
        if (app.count("--out")) cfg.out = out;
        if (baselines) cfg.baselines = true;

        switch (cfg.mode) {
            case zpqe::ExperimentMode::ExactReference: {
                const double e = zpqe::run_exact_reference(cfg, std::cerr);
                std::cout << zpqe::format_double(e) << '\n';
                return 0;
            }
            case zpqe::ExperimentMode::Trajectory: {
                const auto report = zpqe::run_trajectory(cfg, std::cerr);
                for (const auto& v : report.variants) {
                    if (v.summary.empty()) continue;
                    const auto& last = v.summary.back();
                    std::cout << v.variant << ": final energy " << last.energy_mean << " +- " << last.energy_std
                              << ", |E - exact| " << last.abs_error_mean << ", failures " << v.failures << "/"
                              << v.runs.size() << '\n';
                }
                if (report.too_many_failures) {
                    std::cerr << "error: more than 20% of runs failed\n";
                    return kExitRunFailure;
                }
                return 0;
            }
            case zpqe::ExperimentMode::ExtrapolationDemo: {
                const auto report = zpqe::run_extrapolation_demo(cfg, std::cout);
                for (const auto& m : report.models) {
                    if (5 * m.failures > cfg.ensemble) {
                        std::cerr << "error: more than 20% of " << zpqe::model_name(m.model) << " fits failed\n";
                        return kExitRunFailure;
                    }
                }
                return 0;
            }
            case zpqe::ExperimentMode::ResidueLandscape:
                zpqe::run_residue_landscape(cfg, std::cerr);
                return 0;
        }
    } catch (const zpqe::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const zpqe::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRunFailure;
    }
    return 0;
}
