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

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "zpqe/operator/pauli.hpp"

namespace zpqe {

struct LadderOp {
    std::size_t mode = 0;
    bool creation = false;

    bool operator==(const LadderOp&) const = default;
};

/// coeff * ops[0] ops[1] ... ops[k-1]; the rightmost operator acts first.
struct FermionTerm {
    complex coeff = 1.0;
    std::vector<LadderOp> ops;
};

class FermionOperator {
  public:
    FermionOperator() = default;

    void add(complex coeff, std::vector<LadderOp> ops);

    const std::vector<FermionTerm>& terms() const { return terms_; }
    std::size_t max_mode() const;

    FermionOperator adjoint() const;
    FermionOperator& operator+=(const FermionOperator& other);
    FermionOperator& operator*=(complex s);
    friend FermionOperator operator-(FermionOperator a, const FermionOperator& b);

    std::string str() const;

  private:
    std::vector<FermionTerm> terms_;
};

/// a+_p with Z strings on modes < p: a+_p = Z_0 ... Z_{p-1} (X_p - i Y_p) / 2.
PauliSum jw_ladder(std::size_t mode, bool creation, std::size_t n_qubits);

/// Jordan-Wigner image with terms |c| < 1e-12 pruned. Throws std::out_of_range
/// when a mode index is >= n_qubits.
PauliSum jordan_wigner(const FermionOperator& op, std::size_t n_qubits);

}  // namespace zpqe
