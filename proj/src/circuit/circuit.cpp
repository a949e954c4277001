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

#include "zpqe/circuit/circuit.hpp"

#include <sstream>
#include <stdexcept>

namespace zpqe {

void Circuit::append(const Gate& g) {
    const std::size_t arity = g.arity();
    for (std::size_t k = 0; k < arity; ++k) {
        if (g.qubits[k] >= n_qubits_) {
            throw std::invalid_argument("gate " + g.str() + " acts outside a " + std::to_string(n_qubits_) +
                                        "-qubit circuit");
        }
    }
    if (arity == 2 && g.qubits[0] == g.qubits[1]) {
        throw std::invalid_argument("gate " + g.str() + " repeats a qubit");
    }
    Gate stored = g;
    if (arity == 1) stored.qubits[1] = 0;
    if (!gate_has_param(g.kind)) stored.param = 0.0;
    gates_.push_back(stored);
}

void Circuit::append(const Circuit& other) {
    if (other.n_qubits_ != n_qubits_) throw std::invalid_argument("circuit width mismatch");
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

Circuit Circuit::inverse() const {
    Circuit out(n_qubits_);
    out.gates_.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) out.gates_.push_back(it->inverse());
    return out;
}

std::size_t Circuit::count(GateKind kind) const {
    std::size_t n = 0;
    for (const auto& g : gates_) n += g.kind == kind;
    return n;
}

void apply_gate(Eigen::VectorXcd& state, const Gate& g) {
    const Eigen::MatrixXcd m = g.matrix();
    const std::uint64_t dim = static_cast<std::uint64_t>(state.size());
    if (g.arity() == 1) {
        const std::uint64_t bit = std::uint64_t{1} << g.qubits[0];
        for (std::uint64_t k = 0; k < dim; ++k) {
            if (k & bit) continue;
            const auto a0 = state(k);
            const auto a1 = state(k | bit);
            state(k) = m(0, 0) * a0 + m(0, 1) * a1;
            state(k | bit) = m(1, 0) * a0 + m(1, 1) * a1;
        }
        return;
    }
    const std::uint64_t b0 = std::uint64_t{1} << g.qubits[0];
    const std::uint64_t b1 = std::uint64_t{1} << g.qubits[1];
    for (std::uint64_t k = 0; k < dim; ++k) {
        if (k & (b0 | b1)) continue;
        const std::uint64_t idx[4] = {k, k | b0, k | b1, k | b0 | b1};
        Eigen::Vector4cd v;
        for (int r = 0; r < 4; ++r) v(r) = state(idx[r]);
        const Eigen::Vector4cd w = m * v;
        for (int r = 0; r < 4; ++r) state(idx[r]) = w(r);
    }
}

Eigen::MatrixXcd Circuit::unitary() const {
    const std::uint64_t dim = std::uint64_t{1} << n_qubits_;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    for (std::uint64_t col = 0; col < dim; ++col) {
        Eigen::VectorXcd v = u.col(col);
        for (const auto& g : gates_) apply_gate(v, g);
        u.col(col) = v;
    }
    return u;
}

Eigen::VectorXcd simulate_statevector(const Circuit& c) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(std::int64_t{1} << c.num_qubits());
    v(0) = 1.0;
    for (const auto& g : c.gates()) apply_gate(v, g);
    return v;
}

std::string Circuit::dump() const {
    std::string out;
    for (const auto& g : gates_) {
        out += g.str();
        out += '\n';
    }
    return out;
}

Circuit Circuit::parse_dump(std::istream& in, std::size_t n_qubits) {
    Circuit c(n_qubits);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string name;
        std::string qubits;
        ls >> name >> qubits;
        const auto kind = gate_kind_from_name(name);
        if (!kind || qubits.empty()) {
            throw std::invalid_argument("circuit dump line " + std::to_string(line_no) + ": cannot parse '" + line + "'");
        }
        Gate g{*kind, {0, 0}, 0.0};
        const auto comma = qubits.find(',');
        g.qubits[0] = std::stoul(qubits.substr(0, comma));
        if (gate_arity(*kind) == 2) {
            if (comma == std::string::npos) throw std::invalid_argument("circuit dump: two-qubit gate needs 'a,b'");
            g.qubits[1] = std::stoul(qubits.substr(comma + 1));
        }
        if (gate_has_param(*kind) && !(ls >> g.param)) {
            throw std::invalid_argument("circuit dump line " + std::to_string(line_no) + ": missing angle");
        }
        c.append(g);
    }
    return c;
}

}  // namespace zpqe
