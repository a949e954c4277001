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
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace zpqe {

using complex = std::complex<double>;

/// Terms with |c| below this are dropped from canonical sums.
inline constexpr double kPruneTolerance = 1e-12;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(Pauli p);

/// Tensor product of single-qubit Paulis. Qubit q acts on bit q of a
/// computational basis index; the text form lists qubit 0 first.
class PauliString {
  public:
    PauliString() = default;
    explicit PauliString(std::size_t n_qubits) : ops_(n_qubits, Pauli::I) {}

    /// Parses "XIZY"-style text. Throws std::invalid_argument on other characters.
    static PauliString parse(std::string_view text);

    /// Single non-identity factor on `qubit`.
    static PauliString single(std::size_t n_qubits, std::size_t qubit, Pauli p);

    std::size_t num_qubits() const { return ops_.size(); }
    Pauli operator[](std::size_t q) const { return ops_[q]; }
    void set(std::size_t q, Pauli p) { ops_.at(q) = p; }

    bool is_identity() const;
    std::vector<std::size_t> support() const;
    std::string str() const;

    /// Bits flipped by the string (X or Y).
    std::uint64_t x_mask() const;
    /// Bits carrying a Z-type phase (Y or Z).
    std::uint64_t z_mask() const;

    /// <k ^ x_mask| P |k>, i.e. P|k> = phase(k) |k ^ x_mask>.
    complex phase(std::uint64_t basis_index) const;

    auto operator<=>(const PauliString&) const = default;

  private:
    std::vector<Pauli> ops_;
};

/// a * b = phase * P.
std::pair<complex, PauliString> multiply(const PauliString& a, const PauliString& b);

bool commutes(const PauliString& a, const PauliString& b);

/// Weighted sum of Pauli strings in canonical form: one coefficient per
/// distinct string, ordered by string.
class PauliSum {
  public:
    using TermMap = std::map<PauliString, complex>;

    PauliSum() = default;
    explicit PauliSum(std::size_t n_qubits) : n_qubits_(n_qubits) {}

    static PauliSum identity(std::size_t n_qubits, complex coeff = 1.0);

    std::size_t num_qubits() const { return n_qubits_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Adds `coeff * string`, merging with an existing equal string.
    void add(complex coeff, const PauliString& string);

    complex coefficient(const PauliString& string) const;
    complex identity_coefficient() const;

    /// Drops terms with |c| < tol.
    PauliSum& prune(double tol = kPruneTolerance);

    PauliSum adjoint() const;
    bool is_hermitian(double tol = 1e-12) const;

    PauliSum& operator+=(const PauliSum& other);
    PauliSum& operator-=(const PauliSum& other);
    PauliSum& operator*=(complex scalar);

    friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
    friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
    friend PauliSum operator*(PauliSum a, complex s) { return a *= s; }
    friend PauliSum operator*(complex s, PauliSum a) { return a *= s; }
    friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

    Eigen::MatrixXcd to_matrix() const;
    Eigen::VectorXcd apply(const Eigen::VectorXcd& state) const;
    /// <psi|O|psi>.
    complex expectation(const Eigen::VectorXcd& state) const;

    std::string str() const;

  private:
    void check_width(const PauliString& s) const;

    std::size_t n_qubits_ = 0;
    TermMap terms_;
};

}  // namespace zpqe
