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
#include <istream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "zpqe/circuit/gate.hpp"

namespace zpqe {

/// Ordered gate list; gates()[0] is applied first.
class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {}

    std::size_t num_qubits() const { return n_qubits_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }
    const std::vector<Gate>& gates() const { return gates_; }
    const Gate& operator[](std::size_t k) const { return gates_[k]; }

    /// Throws std::invalid_argument for out-of-range or repeated qubits.
    void append(const Gate& g);
    void append(const Circuit& other);

    /// Reversed order, each gate replaced by its exact inverse.
    Circuit inverse() const;

    std::size_t count(GateKind kind) const;

    /// Dense unitary (debugging and tests; dimension 2^n).
    Eigen::MatrixXcd unitary() const;

    /// One gate per line: `<kind> <qubits> [<param>]`, e.g. `cx 0,1` or `rz 2 0.5`.
    std::string dump() const;
    static Circuit parse_dump(std::istream& in, std::size_t n_qubits);

    bool operator==(const Circuit&) const = default;

  private:
    std::size_t n_qubits_ = 0;
    std::vector<Gate> gates_;
};

/// Applies a one- or two-qubit gate matrix to a statevector (bit q = qubit q).
void apply_gate(Eigen::VectorXcd& state, const Gate& g);

/// Statevector produced by the circuit from |0...0>.
Eigen::VectorXcd simulate_statevector(const Circuit& c);

}  // namespace zpqe
