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
#include <filesystem>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zpqe/operator/excitation.hpp"
#include "zpqe/operator/pauli.hpp"

namespace zpqe {

class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Qubit Hamiltonian plus the metadata a PQE run needs.
///
/// File format (UTF-8, line oriented):
///
///     # n_qubits=4
///     # n_electrons=2
///     # orbital_energies=e0,e1,e2,e3      (one per spin-orbital)
///     # reference=0,2                     (optional; default blocked aufbau)
///     -0.5405 IIII
///     0.0179 IIIZ
///
/// Body lines are `<real coefficient> <Pauli string>` with qubit 0 leftmost.
/// A coefficient may also be written `(re,im)`; a nonzero imaginary part is
/// rejected as non-Hermitian. Repeated strings are merged. Other `#` lines are
/// comments, except `key=value` pairs, which are kept in `metadata`.
struct MolecularHamiltonian {
    PauliSum hamiltonian;
    std::size_t n_qubits = 0;
    std::size_t n_electrons = 0;
    ReferenceState reference;
    std::vector<double> orbital_energies;
    std::vector<std::pair<std::string, std::string>> metadata;

    std::optional<std::string> meta(const std::string& key) const;
};

MolecularHamiltonian parse_hamiltonian(std::istream& in, const std::string& source_name = "<stream>");
MolecularHamiltonian load_hamiltonian(const std::filesystem::path& path);

}  // namespace zpqe
