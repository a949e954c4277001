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

#include "zpqe/sim/density_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace zpqe {

DensityMatrix::DensityMatrix(std::size_t n_qubits)
    : n_qubits_(n_qubits), dim_(std::size_t{1} << n_qubits), data_(dim_ * dim_, complex{}) {
    data_[0] = 1.0;
}

DensityMatrix DensityMatrix::from_statevector(const Eigen::VectorXcd& psi) {
    return from_matrix(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::from_matrix(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols() || m.rows() == 0 || (m.rows() & (m.rows() - 1)) != 0) {
        throw std::invalid_argument("density matrix must be square with power-of-two dimension");
    }
    std::size_t n = 0;
    while ((std::int64_t{1} << n) < m.rows()) ++n;
    DensityMatrix rho(n);
    for (std::size_t r = 0; r < rho.dim_; ++r) {
        for (std::size_t c = 0; c < rho.dim_; ++c) rho(r, c) = m(r, c);
    }
    return rho;
}

complex DensityMatrix::trace() const {
    complex t = 0.0;
    for (std::size_t k = 0; k < dim_; ++k) t += (*this)(k, k);
    return t;
}

double DensityMatrix::purity() const {
    // Tr(rho^2) = sum |rho_rc|^2 for Hermitian rho
    double p = 0.0;
    for (const auto& v : data_) p += std::norm(v);
    return p;
}

std::vector<double> DensityMatrix::diagonal() const {
    std::vector<double> d(dim_);
    for (std::size_t k = 0; k < dim_; ++k) d[k] = (*this)(k, k).real();
    return d;
}

Eigen::MatrixXcd DensityMatrix::to_matrix() const {
    Eigen::MatrixXcd m(dim_, dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) m(r, c) = (*this)(r, c);
    }
    return m;
}

double DensityMatrix::hermiticity_error() const {
    double err = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = r; c < dim_; ++c) err = std::max(err, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    }
    return err;
}

double DensityMatrix::min_eigenvalue() const {
    const Eigen::MatrixXcd m = to_matrix();
    const Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

complex DensityMatrix::expectation(const PauliSum& observable) const {
    if (observable.num_qubits() != n_qubits_) throw std::invalid_argument("observable width mismatch");
    complex total = 0.0;
    for (const auto& [s, c] : observable.terms()) {
        const std::uint64_t xm = s.x_mask();
        complex t = 0.0;
        for (std::size_t j = 0; j < dim_; ++j) t += s.phase(j) * (*this)(j, j ^ xm);
        total += c * t;
    }
    return total;
}

void DensityMatrix::apply_unitary(std::size_t q, const Eigen::Matrix2cd& u) {
    const std::size_t bit = std::size_t{1} << q;
    // rows: rho <- U rho
    for (std::size_t r = 0; r < dim_; ++r) {
        if (r & bit) continue;
        complex* row0 = &data_[r * dim_];
        complex* row1 = &data_[(r | bit) * dim_];
        for (std::size_t c = 0; c < dim_; ++c) {
            const complex a0 = row0[c];
            const complex a1 = row1[c];
            row0[c] = u(0, 0) * a0 + u(0, 1) * a1;
            row1[c] = u(1, 0) * a0 + u(1, 1) * a1;
        }
    }
    // columns: rho <- rho U^dagger
    const Eigen::Matrix2cd uc = u.conjugate();
    for (std::size_t r = 0; r < dim_; ++r) {
        complex* row = &data_[r * dim_];
        for (std::size_t c = 0; c < dim_; ++c) {
            if (c & bit) continue;
            const complex a0 = row[c];
            const complex a1 = row[c | bit];
            row[c] = uc(0, 0) * a0 + uc(0, 1) * a1;
            row[c | bit] = uc(1, 0) * a0 + uc(1, 1) * a1;
        }
    }
}

void DensityMatrix::apply_unitary(std::size_t q0, std::size_t q1, const Eigen::Matrix4cd& u) {
    const std::size_t b0 = std::size_t{1} << q0;
    const std::size_t b1 = std::size_t{1} << q1;
    const std::size_t both = b0 | b1;
    for (std::size_t r = 0; r < dim_; ++r) {
        if (r & both) continue;
        const std::size_t rows[4] = {r, r | b0, r | b1, r | both};
        for (std::size_t c = 0; c < dim_; ++c) {
            complex a[4];
            for (int k = 0; k < 4; ++k) a[k] = data_[rows[k] * dim_ + c];
            for (int k = 0; k < 4; ++k) {
                data_[rows[k] * dim_ + c] = u(k, 0) * a[0] + u(k, 1) * a[1] + u(k, 2) * a[2] + u(k, 3) * a[3];
            }
        }
    }
    const Eigen::Matrix4cd uc = u.conjugate();
    for (std::size_t r = 0; r < dim_; ++r) {
        complex* row = &data_[r * dim_];
        for (std::size_t c = 0; c < dim_; ++c) {
            if (c & both) continue;
            const std::size_t cols[4] = {c, c | b0, c | b1, c | both};
            complex a[4];
            for (int k = 0; k < 4; ++k) a[k] = row[cols[k]];
            for (int k = 0; k < 4; ++k) {
                row[cols[k]] = uc(k, 0) * a[0] + uc(k, 1) * a[1] + uc(k, 2) * a[2] + uc(k, 3) * a[3];
            }
        }
    }
}

}  // namespace zpqe
