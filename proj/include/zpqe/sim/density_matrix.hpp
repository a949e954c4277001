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
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "zpqe/operator/pauli.hpp"

namespace zpqe {

/// Dense 2^n x 2^n density matrix, row-major, bit q of an index = qubit q.
class DensityMatrix {
  public:
    DensityMatrix() = default;
    /// |0...0><0...0|.
    explicit DensityMatrix(std::size_t n_qubits);

    static DensityMatrix from_statevector(const Eigen::VectorXcd& psi);
    static DensityMatrix from_matrix(const Eigen::MatrixXcd& m);

    std::size_t num_qubits() const { return n_qubits_; }
    std::size_t dim() const { return dim_; }

    complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

    complex trace() const;
    double purity() const;
    std::vector<double> diagonal() const;
    Eigen::MatrixXcd to_matrix() const;

    double hermiticity_error() const;  // max |rho - rho^dagger|
    double min_eigenvalue() const;

    /// Tr(O rho).
    complex expectation(const PauliSum& observable) const;

    /// rho -> U rho U^dagger for a 2x2 U on `q`.
    void apply_unitary(std::size_t q, const Eigen::Matrix2cd& u);
    /// rho -> U rho U^dagger for a 4x4 U on (q0, q1); U's basis index is b0 + 2 b1.
    void apply_unitary(std::size_t q0, std::size_t q1, const Eigen::Matrix4cd& u);

  private:
    std::size_t n_qubits_ = 0;
    std::size_t dim_ = 0;
    std::vector<complex> data_;
};

}  // namespace zpqe
