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

#include "zpqe/harness/config.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace zpqe {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

double to_double(const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ConfigError("not a number: '" + text + "'");
    }
    if (used != text.size()) throw ConfigError("not a number: '" + text + "'");
    return v;
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string join(const std::vector<double>& xs) {
    std::string out;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (k) out += ',';
        out += format_number(xs[k]);
    }
    return out;
}

bool parse_bool(const std::string& text) {
    if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
    if (text == "false" || text == "0" || text == "no" || text == "off") return false;
    throw ConfigError("not a boolean: '" + text + "'");
}

}  // namespace

std::string_view mode_name(ExperimentMode mode) {
    switch (mode) {
        case ExperimentMode::Trajectory: return "trajectory";
        case ExperimentMode::ExtrapolationDemo: return "extrapolation_demo";
        case ExperimentMode::ResidueLandscape: return "residue_landscape";
        case ExperimentMode::ExactReference: return "exact_reference";
    }
    return "?";
}

ExperimentMode parse_mode(std::string_view name) {
    for (ExperimentMode m : {ExperimentMode::Trajectory, ExperimentMode::ExtrapolationDemo,
                             ExperimentMode::ResidueLandscape, ExperimentMode::ExactReference}) {
        if (mode_name(m) == name) return m;
    }
    throw ConfigError("unknown mode '" + std::string(name) + "'");
}

std::vector<double> parse_number_list(std::string_view text) {
    const std::string t = trim(text);
    std::vector<double> out;
    if (t.empty()) return out;
    if (t.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(t);
        std::string item;
        while (std::getline(ss, item, ':')) parts.push_back(trim(item));
        if (parts.size() != 3) throw ConfigError("range must be 'start:stop:count', got '" + t + "'");
        const double a = to_double(parts[0]);
        const double b = to_double(parts[1]);
        const double n = to_double(parts[2]);
        if (n < 1 || n != static_cast<double>(static_cast<std::size_t>(n))) {
            throw ConfigError("range count must be a positive integer");
        }
        const auto count = static_cast<std::size_t>(n);
        for (std::size_t k = 0; k < count; ++k) {
            out.push_back(count == 1 ? a : a + (b - a) * static_cast<double>(k) / static_cast<double>(count - 1));
        }
        return out;
    }
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(to_double(trim(item)));
    return out;
}

void ExperimentConfig::validate() const {
    if (hamiltonian.empty()) throw ConfigError("no Hamiltonian file given");
    if (!std::filesystem::exists(hamiltonian)) throw ConfigError("Hamiltonian file not found: " + hamiltonian.string());
    if (noise != "none" && noise != "nisq-light" && !std::filesystem::exists(noise)) {
        throw ConfigError("noise model is neither a preset nor an existing file: " + noise);
    }
    if (ensemble < 1) throw ConfigError("ensemble must be >= 1");
    if (jobs < 1) throw ConfigError("jobs must be >= 1");
    if (!(threshold > 0.0)) throw ConfigError("threshold must be > 0");
    if (max_iterations < 1) throw ConfigError("max-iter must be >= 1");
    if (shots > 0 && repeats < 1) throw ConfigError("repeats must be >= 1");
    const bool needs_zne = mitigate || mode == ExperimentMode::ExtrapolationDemo;
    if (needs_zne) {
        ZneConfig check = zne;
        try {
            if (mode == ExperimentMode::ExtrapolationDemo) {
                check.model = ExtrapolationModel::Richardson;
                check.validate();
                for (ExtrapolationModel m : demo_models) {
                    check.model = m;
                    check.validate();
                }
            } else {
                check.validate();
            }
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
    if (mode == ExperimentMode::ResidueLandscape && sweep_evaluations < 1) {
        throw ConfigError("landscape evaluations must be >= 1");
    }
}

Backend ExperimentConfig::backend() const {
    Backend b;
    b.noise = NoiseModel::from_spec(noise);
    b.shots = {shots, repeats};
    if (mitigate) b.zne = zne;
    b.scope = scope;
    return b;
}

std::string ExperimentConfig::to_ini() const {
    std::ostringstream os;
    os << "[experiment]\n"
       << "mode = " << mode_name(mode) << '\n'
       << "hamiltonian = " << hamiltonian.string() << '\n'
       << "noise = " << noise << '\n'
       << "out = " << out.string() << '\n'
       << "seed = " << seed << '\n'
       << "ensemble = " << ensemble << '\n'
       << "jobs = " << jobs << '\n'
       << "baselines = " << (baselines ? "true" : "false") << '\n'
       << "[solver]\n"
       << "threshold = " << format_number(threshold) << '\n'
       << "max_iterations = " << max_iterations << '\n'
       << "shots = " << shots << '\n'
       << "repeats = " << repeats << '\n'
       << "denominator_floor = " << format_number(denominator_floor) << '\n'
       << "[mitigation]\n"
       << "mitigation = " << (mitigate ? "zne" : "none") << '\n'
       << "model = " << model_name(zne.model) << '\n'
       << "schedule = " << join(zne.schedule) << '\n'
       << "asymptote = " << (zne.asymptote ? format_number(*zne.asymptote) : "") << '\n'
       << "max_adaptive_nodes = " << zne.max_adaptive_nodes << '\n'
       << "lambda_max = " << format_number(zne.lambda_max) << '\n'
       << "fold_mode = " << fold_mode_name(zne.fold_mode) << '\n'
       << "scope = " << scope_name(scope) << '\n'
       << "[demo]\n"
       << "theta = " << join(demo_theta) << '\n'
       << "models = ";
    for (std::size_t k = 0; k < demo_models.size(); ++k) os << (k ? "," : "") << model_name(demo_models[k]);
    os << '\n'
       << "[landscape]\n"
       << "param_index = " << sweep_index << '\n'
       << "grid = " << join(sweep_grid) << '\n'
       << "evaluations = " << sweep_evaluations << '\n'
       << "theta = " << join(sweep_theta) << '\n';
    return os.str();
}

std::string ExperimentConfig::hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : to_ini()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ExperimentConfig parse_config(std::istream& in) {
    namespace pt = boost::property_tree;
    pt::ptree tree;
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    static const std::vector<std::pair<std::string, std::vector<std::string>>> known = {
        {"experiment", {"mode", "hamiltonian", "noise", "out", "seed", "ensemble", "jobs", "baselines"}},
        {"solver", {"threshold", "max_iterations", "shots", "repeats", "denominator_floor"}},
        {"mitigation",
         {"mitigation", "model", "schedule", "asymptote", "max_adaptive_nodes", "lambda_max", "fold_mode", "scope"}},
        {"demo", {"theta", "models"}},
        {"landscape", {"param_index", "grid", "evaluations", "theta"}},
    };
    for (const auto& [section, body] : tree) {
        auto it = std::find_if(known.begin(), known.end(), [&](const auto& k) { return k.first == section; });
        if (it == known.end()) throw ConfigError("unknown config section [" + section + "]");
        for (const auto& [key, value] : body) {
            if (std::find(it->second.begin(), it->second.end(), key) == it->second.end()) {
                throw ConfigError("unknown key '" + key + "' in [" + section + "]");
            }
        }
    }

    auto get = [&](const std::string& path) -> std::optional<std::string> {
        auto v = tree.get_optional<std::string>(path);
        if (!v) return std::nullopt;
        return trim(*v);
    };
    auto get_count = [&](const std::string& path, std::size_t& target) {
        if (auto v = get(path)) {
            const double d = to_double(*v);
            if (d < 0 || d != static_cast<double>(static_cast<std::size_t>(d))) {
                throw ConfigError(path + " must be a non-negative integer");
            }
            target = static_cast<std::size_t>(d);
        }
    };

    ExperimentConfig c;
    try {
        if (auto v = get("experiment.mode")) c.mode = parse_mode(*v);
        if (auto v = get("experiment.hamiltonian")) c.hamiltonian = *v;
        if (auto v = get("experiment.noise")) c.noise = *v;
        if (auto v = get("experiment.out")) c.out = *v;
        if (auto v = get("experiment.seed")) c.seed = std::stoull(*v);
        get_count("experiment.ensemble", c.ensemble);
        get_count("experiment.jobs", c.jobs);
        if (auto v = get("experiment.baselines")) c.baselines = parse_bool(*v);

        if (auto v = get("solver.threshold")) c.threshold = to_double(*v);
        get_count("solver.max_iterations", c.max_iterations);
        get_count("solver.shots", c.shots);
        get_count("solver.repeats", c.repeats);
        if (auto v = get("solver.denominator_floor")) c.denominator_floor = to_double(*v);

        if (auto v = get("mitigation.mitigation")) {
            if (*v != "none" && *v != "zne") throw ConfigError("mitigation must be 'none' or 'zne'");
            c.mitigate = *v == "zne";
        }
        if (auto v = get("mitigation.model")) c.zne.model = parse_model(*v);
        if (auto v = get("mitigation.schedule")) c.zne.schedule = parse_number_list(*v);
        if (auto v = get("mitigation.asymptote"); v && !v->empty()) c.zne.asymptote = to_double(*v);
        get_count("mitigation.max_adaptive_nodes", c.zne.max_adaptive_nodes);
        if (auto v = get("mitigation.lambda_max")) c.zne.lambda_max = to_double(*v);
        if (auto v = get("mitigation.fold_mode")) c.zne.fold_mode = parse_fold_mode(*v);
        if (auto v = get("mitigation.scope")) c.scope = parse_scope(*v);

        if (auto v = get("demo.theta")) c.demo_theta = parse_number_list(*v);
        if (auto v = get("demo.models")) {
            c.demo_models.clear();
            std::stringstream ss(*v);
            std::string item;
            while (std::getline(ss, item, ',')) c.demo_models.push_back(parse_model(trim(item)));
        }

        get_count("landscape.param_index", c.sweep_index);
        if (auto v = get("landscape.grid")) c.sweep_grid = parse_number_list(*v);
        get_count("landscape.evaluations", c.sweep_evaluations);
        if (auto v = get("landscape.theta")) c.sweep_theta = parse_number_list(*v);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    return parse_config(in);
}

}  // namespace zpqe
