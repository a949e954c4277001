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

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "zpqe/harness/config.hpp"
#include "zpqe/harness/exact.hpp"
#include "zpqe/harness/experiments.hpp"
#include "zpqe/harness/output.hpp"
#include "zpqe/harness/validate.hpp"

using namespace zpqe;
namespace fs = std::filesystem;

namespace {

const std::string kH2 = std::string(ZPQE_DATA_DIR) + "/h2_2.25.ham";
const std::string kHeH = std::string(ZPQE_DATA_DIR) + "/heh+_0.55.ham";

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> column(const std::string& csv, std::size_t index) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string line;
    std::getline(ss, line);
    while (std::getline(ss, line)) {
        std::stringstream row(line);
        std::string cell;
        for (std::size_t k = 0; k <= index; ++k) std::getline(row, cell, ',');
        out.push_back(cell);
    }
    return out;
}

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("zpqe_harness_test_" + name);
    fs::remove_all(p);
    return p;
}

ExperimentConfig noiseless_config(const std::string& name) {
    ExperimentConfig c;
    c.hamiltonian = kH2;
    c.noise = "none";
    c.shots = 0;
    c.ensemble = 1;
    c.out = scratch(name);
    return c;
}

PauliSum single(const std::string& text, double coeff) {
    PauliSum s(text.size());
    s.add(coeff, PauliString::parse(text));
    return s;
}

}  // namespace

TEST_CASE("Exact ground energy of small operators", "[harness]") {
    REQUIRE(exact_ground_energy(single("Z", -1.0)) == Catch::Approx(-1.0).margin(1e-14));
    REQUIRE(exact_ground_energy(single("X", 1.0)) == Catch::Approx(-1.0).margin(1e-14));
    REQUIRE_THROWS_AS(exact_ground_energy(single("ZZZ", 1.0), 2), std::length_error);
}

TEST_CASE("Exact ground energy matches the externally computed FCI values", "[harness][oracle]") {
    for (const auto& file : {kH2, kHeH}) {
        const auto h = load_hamiltonian(file);
        REQUIRE(std::abs(exact_ground_energy(h.hamiltonian) - std::stod(*h.meta("fci_energy"))) < 1e-8);
    }
}

TEST_CASE("Config text round trips and hashes stably", "[harness]") {
    std::istringstream in(
        "[experiment]\nmode = extrapolation_demo\nhamiltonian = h.ham\nseed = 42\nensemble = 7\n"
        "[mitigation]\nmitigation = zne\nmodel = adaptive\nasymptote = -0.8\nschedule = 1:5:5\n"
        "[landscape]\ngrid = -0.1,0,0.1\n");
    const ExperimentConfig c = parse_config(in);
    REQUIRE(c.mode == ExperimentMode::ExtrapolationDemo);
    REQUIRE(c.seed == 42);
    REQUIRE(c.ensemble == 7);
    REQUIRE(c.mitigate);
    REQUIRE(c.zne.model == ExtrapolationModel::AdaptiveExponential);
    REQUIRE(c.zne.asymptote == -0.8);
    REQUIRE(c.zne.schedule == std::vector<double>{1, 2, 3, 4, 5});
    REQUIRE(c.sweep_grid.size() == 3);

    std::istringstream again(c.to_ini());
    const ExperimentConfig d = parse_config(again);
    REQUIRE(d.to_ini() == c.to_ini());
    REQUIRE(d.hash() == c.hash());
    REQUIRE(c.hash().size() == 16);

    ExperimentConfig e = c;
    e.seed = 43;
    REQUIRE(e.hash() != c.hash());
}

TEST_CASE("Config errors are reported", "[harness]") {
    std::istringstream unknown("[solver]\nshotz = 5\n");
    REQUIRE_THROWS_AS(parse_config(unknown), ConfigError);
    std::istringstream bad_number("[solver]\nshots = many\n");
    REQUIRE_THROWS_AS(parse_config(bad_number), ConfigError);
    std::istringstream bad_mode("[experiment]\nmode = sideways\n");
    REQUIRE_THROWS_AS(parse_config(bad_mode), ConfigError);
    REQUIRE_THROWS_AS(parse_number_list("1:2"), ConfigError);

    ExperimentConfig c;
    c.hamiltonian = "/nonexistent/file.ham";
    REQUIRE_THROWS_AS(c.validate(), ConfigError);
    c.hamiltonian = kH2;
    c.ensemble = 0;
    REQUIRE_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("Summaries carry finished runs forward and skip aborted ones", "[harness]") {
    auto run = [](std::vector<double> energies, TrajectoryStatus status) {
        RunRecord r;
        for (std::size_t k = 0; k < energies.size(); ++k) {
            PqeState s;
            s.iteration = k;
            s.energy = energies[k];
            s.residue_norm = 0.1 / static_cast<double>(k + 1);
            r.trajectory.states.push_back(s);
        }
        r.trajectory.status = status;
        return r;
    };
    const std::vector<RunRecord> runs = {run({-1.0, -2.0}, TrajectoryStatus::Converged),
                                         run({-1.0, -1.5, -3.0}, TrajectoryStatus::MaxIterations),
                                         run({5.0}, TrajectoryStatus::Aborted)};
    const auto rows = summarize(runs, -2.0);
    REQUIRE(rows.size() == 3);
    REQUIRE(rows[0].runs == 2);
    REQUIRE(rows[0].energy_mean == Catch::Approx(-1.0));
    REQUIRE(rows[2].energy_mean == Catch::Approx(-2.5));
    REQUIRE(rows[2].abs_error_mean == Catch::Approx(0.5));
    REQUIRE(rows[2].energy_std == Catch::Approx(std::sqrt(0.5)));
}

TEST_CASE("Single noiseless run: summary equals the trajectory", "[harness]") {
    const ExperimentConfig c = noiseless_config("single");
    std::ostringstream log;
    const auto report = run_trajectory(c, log);
    REQUIRE(report.variants.size() == 1);
    REQUIRE(report.variants[0].runs[0].trajectory.converged());
    const std::string run = slurp(c.out / "unmitigated" / "run_000.csv");
    const std::string summary = slurp(c.out / "unmitigated" / "summary.csv");
    REQUIRE(column(run, 1) == column(summary, 2));
    REQUIRE(column(run, 2) == column(summary, 6));
    REQUIRE(fs::exists(c.out / "manifest.json"));
}

TEST_CASE("Identical configs give byte-identical outputs regardless of jobs", "[harness]") {
    ExperimentConfig a = noiseless_config("repro_a");
    a.noise = "nisq-light";
    a.shots = 256;
    a.repeats = 2;
    a.ensemble = 3;
    a.max_iterations = 3;
    a.mitigate = true;
    ExperimentConfig b = a;
    b.out = scratch("repro_b");
    b.jobs = 3;
    std::ostringstream log;
    run_trajectory(a, log);
    run_trajectory(b, log);
    for (const auto& entry : fs::recursive_directory_iterator(a.out)) {
        if (entry.path().extension() != ".csv") continue;
        const fs::path rel = fs::relative(entry.path(), a.out);
        REQUIRE(slurp(entry.path()) == slurp(b.out / rel));
    }
    REQUIRE(fs::exists(a.out / "zne_richardson" / "run_002_diagonals.csv"));
}

TEST_CASE("Exact reference agrees with the noiseless solver", "[harness]") {
    for (const auto& file : {kH2, kHeH}) {
        ExperimentConfig c = noiseless_config("exact");
        c.hamiltonian = file;
        std::ostringstream log;
        const double exact = run_exact_reference(c, log);
        const auto report = run_trajectory(c, log);
        REQUIRE(std::abs(report.variants[0].runs[0].trajectory.final_state().energy - exact) < 1e-6);
    }
}

TEST_CASE("Null-noise extrapolation demo reproduces the exact value", "[harness]") {
    ExperimentConfig c = noiseless_config("demo");
    c.ensemble = 2;
    c.zne.asymptote = -0.8;
    std::ostringstream log;
    const auto report = run_extrapolation_demo(c, log);
    REQUIRE(report.models.size() == 3);
    for (const auto& m : report.models) {
        REQUIRE(m.failures == 0);
        REQUIRE(std::abs(m.mean - report.exact_value) < 1e-9);
    }
}

TEST_CASE("Landscape at the noiseless optimum has a vanishing residue", "[harness]") {
    ExperimentConfig c = noiseless_config("landscape");
    const auto h = load_hamiltonian(kH2);
    const auto theta = noiseless_optimum(h, c);
    c.sweep_grid = {theta[0]};
    c.sweep_evaluations = 1;
    std::ostringstream log;
    const auto report = run_residue_landscape(c, log);
    REQUIRE(report.rows.size() == 1);
    REQUIRE(report.rows[0].noiseless.mean_norm < 1e-5);
    REQUIRE(fs::exists(c.out / "landscape.csv"));
}

TEST_CASE("Validation suite passes on the shipped Hamiltonians", "[harness]") {
    for (const auto& file : {kH2, kHeH}) {
        for (const auto& check : run_validation(file)) {
            INFO(check.name << ": " << check.detail);
            REQUIRE(check.passed);
        }
    }
}

TEST_CASE("CSV cells use round-trip precision", "[harness]") {
    REQUIRE(format_double(0.1) == "0.10000000000000001");
    REQUIRE(format_double(std::nan("")) == "nan");
    CsvTable t({"a", "b"});
    t.add_row({"1", "2"});
    REQUIRE(t.str() == "a,b\n1,2\n");
    REQUIRE_THROWS(t.add_row({"1"}));
}
