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

#include "zpqe/operator/fermion.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zpqe {

void FermionOperator::add(complex coeff, std::vector<LadderOp> ops) {
    terms_.push_back(FermionTerm{coeff, std::move(ops)});
}

std::size_t FermionOperator::max_mode() const {
    std::size_t m = 0;
    for (const auto& t : terms_) {
        for (const auto& op : t.ops) m = std::max(m, op.mode);
    }
    return m;
}

FermionOperator FermionOperator::adjoint() const {
    FermionOperator out;
    for (const auto& t : terms_) {
        std::vector<LadderOp> ops(t.ops.rbegin(), t.ops.rend());
        for (auto& op : ops) op.creation = !op.creation;
        out.add(std::conj(t.coeff), std::move(ops));
    }
    return out;
}

FermionOperator& FermionOperator::operator+=(const FermionOperator& other) {
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    return *this;
}

FermionOperator& FermionOperator::operator*=(complex s) {
    for (auto& t : terms_) t.coeff *= s;
    return *this;
}

FermionOperator operator-(FermionOperator a, const FermionOperator& b) {
    for (const auto& t : b.terms_) a.add(-t.coeff, t.ops);
    return a;
}

std::string FermionOperator::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << t.coeff;
        for (const auto& op : t.ops) os << " a" << (op.creation ? "+" : "") << "_" << op.mode;
    }
    return os.str();
}

PauliSum jw_ladder(std::size_t mode, bool creation, std::size_t n_qubits) {
    if (mode >= n_qubits) {
        throw std::out_of_range("fermionic mode " + std::to_string(mode) + " out of range for " +
                                std::to_string(n_qubits) + " qubits");
    }
    PauliString x(n_qubits);
    PauliString y(n_qubits);
    for (std::size_t q = 0; q < mode; ++q) {
        x.set(q, Pauli::Z);
        y.set(q, Pauli::Z);
    }
    x.set(mode, Pauli::X);
    y.set(mode, Pauli::Y);
    PauliSum out(n_qubits);
    out.add(0.5, x);
    out.add(creation ? complex(0, -0.5) : complex(0, 0.5), y);
    return out;
}

PauliSum jordan_wigner(const FermionOperator& op, std::size_t n_qubits) {
    PauliSum total(n_qubits);
    for (const auto& term : op.terms()) {
        PauliSum product = PauliSum::identity(n_qubits, term.coeff);
        for (const auto& ladder : term.ops) {
            product = product * jw_ladder(ladder.mode, ladder.creation, n_qubits);
            product.prune();
        }
        total += product;
    }
    return total.prune();
}

}  // namespace zpqe
