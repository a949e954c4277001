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

#include "zpqe/operator/hamiltonian_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace zpqe {

namespace {

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& text, const std::string& where) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) throw ParseError(where + ": cannot parse number '" + text + "'");
    return v;
}

std::size_t to_count(const std::string& text, const std::string& where) {
    std::size_t v = 0;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), last, v);
    if (ec != std::errc{} || ptr != last) throw ParseError(where + ": cannot parse count '" + text + "'");
    return v;
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(trim(item));
    return out;
}

complex parse_coefficient(const std::string& tok, const std::string& where) {
    if (!tok.empty() && tok.front() == '(') {
        if (tok.back() != ')') throw ParseError(where + ": malformed complex coefficient '" + tok + "'");
        const auto parts = split_commas(tok.substr(1, tok.size() - 2));
        if (parts.size() != 2) throw ParseError(where + ": malformed complex coefficient '" + tok + "'");
        return {to_double(parts[0], where), to_double(parts[1], where)};
    }
    return {to_double(tok, where), 0.0};
}

}  // namespace

std::optional<std::string> MolecularHamiltonian::meta(const std::string& key) const {
    for (const auto& [k, v] : metadata) {
        if (k == key) return v;
    }
    return std::nullopt;
}

MolecularHamiltonian parse_hamiltonian(std::istream& in, const std::string& source_name) {
    MolecularHamiltonian out;
    std::optional<std::size_t> declared_qubits;
    std::optional<std::size_t> declared_electrons;
    std::optional<std::vector<std::size_t>> declared_reference;
    std::vector<std::pair<complex, std::string>> body;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string where = source_name + ":" + std::to_string(line_no);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '#') {
            const std::string content = trim(line.substr(1));
            const auto eq = content.find('=');
            if (eq == std::string::npos || content.find(' ') < eq) continue;
            const std::string key = trim(content.substr(0, eq));
            const std::string value = trim(content.substr(eq + 1));
            out.metadata.emplace_back(key, value);
            if (key == "n_qubits") {
                declared_qubits = to_count(value, where);
            } else if (key == "n_electrons") {
                declared_electrons = to_count(value, where);
            } else if (key == "orbital_energies") {
                out.orbital_energies.clear();
                for (const auto& e : split_commas(value)) out.orbital_energies.push_back(to_double(e, where));
            } else if (key == "reference") {
                std::vector<std::size_t> idx;
                for (const auto& e : split_commas(value)) idx.push_back(to_count(e, where));
                declared_reference = idx;
            }
            continue;
        }
        std::istringstream ls(line);
        std::string coeff_tok;
        std::string pauli_tok;
        std::string extra;
        if (!(ls >> coeff_tok >> pauli_tok) || (ls >> extra)) {
            throw ParseError(where + ": expected '<coefficient> <pauli string>'");
        }
        body.emplace_back(parse_coefficient(coeff_tok, where), pauli_tok);
    }

    if (body.empty()) throw ParseError(source_name + ": no Hamiltonian terms");
    const std::size_t n = declared_qubits.value_or(body.front().second.size());
    if (n == 0 || n > 30) throw ParseError(source_name + ": unsupported qubit count " + std::to_string(n));
    out.n_qubits = n;
    out.hamiltonian = PauliSum(n);
    for (const auto& [c, text] : body) {
        if (text.size() != n) {
            throw ParseError(source_name + ": Pauli string '" + text + "' has length " + std::to_string(text.size()) +
                             ", expected " + std::to_string(n));
        }
        PauliString s;
        try {
            s = PauliString::parse(text);
        } catch (const std::invalid_argument& e) {
            throw ParseError(source_name + ": " + e.what());
        }
        out.hamiltonian.add(c, s);
    }
    out.hamiltonian.prune();
    for (const auto& [s, c] : out.hamiltonian.terms()) {
        if (std::abs(c.imag()) > kPruneTolerance) {
            throw ParseError(source_name + ": non-Hermitian coefficient on " + s.str());
        }
    }

    if (!out.orbital_energies.empty() && out.orbital_energies.size() != n) {
        throw ParseError(source_name + ": orbital_energies has " + std::to_string(out.orbital_energies.size()) +
                         " entries, expected one per qubit (" + std::to_string(n) + ")");
    }
    out.n_electrons = declared_electrons.value_or(declared_reference ? declared_reference->size() : 0);
    if (declared_reference) {
        try {
            out.reference = ReferenceState::from_indices(n, *declared_reference);
        } catch (const std::invalid_argument& e) {
            throw ParseError(source_name + ": " + e.what());
        }
        if (out.reference.num_electrons() != out.n_electrons) {
            throw ParseError(source_name + ": reference occupies " + std::to_string(out.reference.num_electrons()) +
                             " orbitals but n_electrons=" + std::to_string(out.n_electrons));
        }
    } else if (out.n_electrons > 0) {
        try {
            out.reference = ReferenceState::aufbau(n, out.n_electrons);
        } catch (const std::invalid_argument& e) {
            throw ParseError(source_name + ": " + e.what());
        }
    } else {
        out.reference = ReferenceState(n, 0);
    }
    return out;
}

MolecularHamiltonian load_hamiltonian(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open Hamiltonian file " + path.string());
    return parse_hamiltonian(in, path.string());
}

}  // namespace zpqe
