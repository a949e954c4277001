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

#include "zpqe/sim/noise_model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace zpqe {

namespace pt = boost::property_tree;

namespace {

double parse_time(std::string text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.erase(text.begin());
    if (text == "inf" || text == "infinity") return kInfiniteTime;
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("cannot parse number '" + text + "'");
    return v;
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_time(item));
    if (out.empty()) throw std::invalid_argument("empty value list");
    return out;
}

std::string format_list(const std::vector<double>& xs) {
    std::ostringstream os;
    os.precision(17);
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (k) os << ',';
        if (std::isinf(xs[k])) {
            os << "inf";
        } else {
            os << xs[k];
        }
    }
    return os.str();
}

}  // namespace

NoiseModel NoiseModel::ideal() {
    NoiseModel m;
    m.name = "none";
    for (auto& d : m.durations_ns) d = 0.0;
    return m;
}

NoiseModel NoiseModel::nisq_light() {
    NoiseModel m;
    m.name = "nisq-light";
    m.p_depol_1q = 0.001;
    m.p_depol_2q = 0.01;
    m.t1_us = {100.0};
    m.t2_us = {80.0};
    m.readout = {ReadoutConfusion{0.02, 0.02}};
    for (GateKind k : {GateKind::X, GateKind::SX, GateKind::SXdg, GateKind::RZ}) {
        m.durations_ns[static_cast<std::size_t>(k)] = 35.0;
    }
    m.durations_ns[static_cast<std::size_t>(GateKind::CX)] = 300.0;
    return m;
}

NoiseModel NoiseModel::preset(const std::string& name) {
    if (name == "none") return ideal();
    if (name == "nisq-light") return nisq_light();
    throw std::invalid_argument("unknown noise preset '" + name + "'");
}

NoiseModel NoiseModel::parse(std::istream& in, const std::string& name) {
    pt::ptree tree;
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw std::invalid_argument("noise model " + name + ": " + e.what());
    }
    const pt::ptree& noise = tree.get_child("noise", tree);
    NoiseModel m;
    m.name = name;
    try {
        m.p_depol_1q = noise.get<double>("p_depol_1q", 0.0);
        m.p_depol_2q = noise.get<double>("p_depol_2q", 0.0);
        if (auto v = noise.get_optional<std::string>("t1_us")) m.t1_us = parse_list(*v);
        if (auto v = noise.get_optional<std::string>("t2_us")) m.t2_us = parse_list(*v);
        const auto p10 = parse_list(noise.get<std::string>("readout_p1_given_0", "0"));
        const auto p01 = parse_list(noise.get<std::string>("readout_p0_given_1", "0"));
        if (p10.size() != p01.size() && p10.size() != 1 && p01.size() != 1) {
            throw std::invalid_argument("readout lists have different lengths");
        }
        const std::size_t nr = std::max(p10.size(), p01.size());
        m.readout.assign(nr, ReadoutConfusion{});
        for (std::size_t q = 0; q < nr; ++q) {
            m.readout[q].p1_given_0 = p10.size() == 1 ? p10[0] : p10[q];
            m.readout[q].p0_given_1 = p01.size() == 1 ? p01[0] : p01[q];
        }
        if (auto durations = tree.get_child_optional("durations_ns")) {
            for (const auto& [key, value] : *durations) {
                const auto kind = gate_kind_from_name(key);
                if (!kind) throw std::invalid_argument("unknown gate kind '" + key + "' in [durations_ns]");
                m.durations_ns[static_cast<std::size_t>(*kind)] = parse_time(value.data());
            }
        }
    } catch (const pt::ptree_error& e) {
        throw std::invalid_argument("noise model " + name + ": " + e.what());
    }
    m.validate();
    return m;
}

NoiseModel NoiseModel::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open noise model file " + path.string());
    return parse(in, path.string());
}

NoiseModel NoiseModel::from_spec(const std::string& preset_or_path) {
    if (preset_or_path == "none" || preset_or_path == "nisq-light") return preset(preset_or_path);
    return load(preset_or_path);
}

void NoiseModel::validate() const {
    auto prob = [](double p, const char* what) {
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
    };
    prob(p_depol_1q, "p_depol_1q");
    prob(p_depol_2q, "p_depol_2q");
    if (t1_us.empty() || t2_us.empty() || readout.empty()) throw std::invalid_argument("empty per-qubit list");
    if (t1_us.size() != t2_us.size() && t1_us.size() != 1 && t2_us.size() != 1) {
        throw std::invalid_argument("t1_us and t2_us have different lengths");
    }
    const std::size_t nq = std::max(t1_us.size(), t2_us.size());
    for (std::size_t q = 0; q < nq; ++q) {
        const double a = t1(q);
        const double b = t2(q);
        if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("T1 and T2 must be positive");
        if (b > 2.0 * a) {
            throw std::invalid_argument("unphysical relaxation on qubit " + std::to_string(q) + ": T2 > 2 T1");
        }
    }
    for (const auto& r : readout) {
        prob(r.p1_given_0, "readout p(1|0)");
        prob(r.p0_given_1, "readout p(0|1)");
    }
    for (const auto& d : durations_ns) {
        if (d && !(*d >= 0.0)) throw std::invalid_argument("gate durations must be >= 0");
    }
}

bool NoiseModel::has_gate_noise() const {
    if (p_depol_1q > 0.0 || p_depol_2q > 0.0) return true;
    const std::size_t nq = std::max(t1_us.size(), t2_us.size());
    for (std::size_t q = 0; q < nq; ++q) {
        if (!std::isinf(t1(q)) || !std::isinf(t2(q))) return true;
    }
    return false;
}

bool NoiseModel::has_readout_error() const {
    for (const auto& r : readout) {
        if (!r.is_identity()) return true;
    }
    return false;
}

bool NoiseModel::is_ideal() const { return !has_gate_noise() && !has_readout_error(); }

double NoiseModel::duration_us(GateKind kind) const {
    const auto& d = durations_ns[static_cast<std::size_t>(kind)];
    if (!d) {
        throw std::invalid_argument("noise model '" + name + "' has no duration for gate '" +
                                    std::string(gate_name(kind)) + "'");
    }
    return *d / 1000.0;
}

std::string NoiseModel::to_ini() const {
    std::ostringstream os;
    os.precision(17);
    os << "[noise]\n";
    os << "p_depol_1q = " << p_depol_1q << '\n';
    os << "p_depol_2q = " << p_depol_2q << '\n';
    os << "t1_us = " << format_list(t1_us) << '\n';
    os << "t2_us = " << format_list(t2_us) << '\n';
    std::vector<double> p10;
    std::vector<double> p01;
    for (const auto& r : readout) {
        p10.push_back(r.p1_given_0);
        p01.push_back(r.p0_given_1);
    }
    os << "readout_p1_given_0 = " << format_list(p10) << '\n';
    os << "readout_p0_given_1 = " << format_list(p01) << '\n';
    os << "[durations_ns]\n";
    for (std::size_t k = 0; k < kNumGateKinds; ++k) {
        if (durations_ns[k]) os << gate_name(static_cast<GateKind>(k)) << " = " << *durations_ns[k] << '\n';
    }
    return os.str();
}

}  // namespace zpqe
