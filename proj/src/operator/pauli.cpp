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

#include "zpqe/operator/pauli.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace zpqe {

char to_char(Pauli p) {
    static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
    return kChars[static_cast<int>(p)];
}

PauliString PauliString::parse(std::string_view text) {
    PauliString s(text.size());
    for (std::size_t q = 0; q < text.size(); ++q) {
        switch (text[q]) {
            case 'I': break;
            case 'X': s.ops_[q] = Pauli::X; break;
            case 'Y': s.ops_[q] = Pauli::Y; break;
            case 'Z': s.ops_[q] = Pauli::Z; break;
            default:
                throw std::invalid_argument("invalid Pauli character '" + std::string(1, text[q]) +
                                            "' in \"" + std::string(text) + "\"");
        }
    }
    return s;
}

PauliString PauliString::single(std::size_t n_qubits, std::size_t qubit, Pauli p) {
    PauliString s(n_qubits);
    s.set(qubit, p);
    return s;
}

bool PauliString::is_identity() const {
    for (Pauli p : ops_) {
        if (p != Pauli::I) return false;
    }
    return true;
}

std::vector<std::size_t> PauliString::support() const {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < ops_.size(); ++q) {
        if (ops_[q] != Pauli::I) out.push_back(q);
    }
    return out;
}

std::string PauliString::str() const {
    std::string out(ops_.size(), 'I');
    for (std::size_t q = 0; q < ops_.size(); ++q) out[q] = to_char(ops_[q]);
    return out;
}

std::uint64_t PauliString::x_mask() const {
    std::uint64_t m = 0;
    for (std::size_t q = 0; q < ops_.size(); ++q) {
        if (ops_[q] == Pauli::X || ops_[q] == Pauli::Y) m |= std::uint64_t{1} << q;
    }
    return m;
}

std::uint64_t PauliString::z_mask() const {
    std::uint64_t m = 0;
    for (std::size_t q = 0; q < ops_.size(); ++q) {
        if (ops_[q] == Pauli::Z || ops_[q] == Pauli::Y) m |= std::uint64_t{1} << q;
    }
    return m;
}

complex PauliString::phase(std::uint64_t k) const {
    // Y = i X Z, so Y|b> = i (-1)^b |b^1>.
    const std::uint64_t xm = x_mask();
    const std::uint64_t zm = z_mask();
    const int n_y = std::popcount(xm & zm);
    const int n_minus = std::popcount(zm & k);
    static constexpr complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    complex ph = kIPow[n_y % 4];
    return (n_minus % 2) ? -ph : ph;
}

std::pair<complex, PauliString> multiply(const PauliString& a, const PauliString& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("Pauli string width mismatch");
    }
    PauliString out(a.num_qubits());
    complex phase = 1.0;
    const complex i(0, 1);
    for (std::size_t q = 0; q < a.num_qubits(); ++q) {
        const Pauli pa = a[q];
        const Pauli pb = b[q];
        if (pa == Pauli::I) {
            out.set(q, pb);
        } else if (pb == Pauli::I) {
            out.set(q, pa);
        } else if (pa == pb) {
            out.set(q, Pauli::I);
        } else {
            // XY = iZ, YZ = iX, ZX = iY; reversed order picks up -i.
            const int ia = static_cast<int>(pa);
            const int ib = static_cast<int>(pb);
            const int ic = 6 - ia - ib;
            out.set(q, static_cast<Pauli>(ic));
            const bool cyclic = (ib - ia + 3) % 3 == 1;
            phase *= cyclic ? i : -i;
        }
    }
    return {phase, out};
}

bool commutes(const PauliString& a, const PauliString& b) {
    int anti = 0;
    for (std::size_t q = 0; q < a.num_qubits(); ++q) {
        if (a[q] != Pauli::I && b[q] != Pauli::I && a[q] != b[q]) ++anti;
    }
    return anti % 2 == 0;
}

PauliSum PauliSum::identity(std::size_t n_qubits, complex coeff) {
    PauliSum s(n_qubits);
    s.add(coeff, PauliString(n_qubits));
    return s;
}

void PauliSum::check_width(const PauliString& s) const {
    if (s.num_qubits() != n_qubits_) {
        throw std::invalid_argument("Pauli string \"" + s.str() + "\" does not match qubit count " +
                                    std::to_string(n_qubits_));
    }
}

void PauliSum::add(complex coeff, const PauliString& string) {
    check_width(string);
    terms_[string] += coeff;
}

complex PauliSum::coefficient(const PauliString& string) const {
    auto it = terms_.find(string);
    return it == terms_.end() ? complex{} : it->second;
}

complex PauliSum::identity_coefficient() const { return coefficient(PauliString(n_qubits_)); }

PauliSum& PauliSum::prune(double tol) {
    std::erase_if(terms_, [tol](const auto& kv) { return std::abs(kv.second) < tol; });
    return *this;
}

PauliSum PauliSum::adjoint() const {
    PauliSum out(n_qubits_);
    for (const auto& [s, c] : terms_) out.terms_.emplace(s, std::conj(c));
    return out;
}

bool PauliSum::is_hermitian(double tol) const {
    for (const auto& [s, c] : terms_) {
        if (std::abs(c.imag()) > tol) return false;
    }
    return true;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
    if (other.n_qubits_ != n_qubits_) throw std::invalid_argument("PauliSum width mismatch");
    for (const auto& [s, c] : other.terms_) terms_[s] += c;
    return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
    if (other.n_qubits_ != n_qubits_) throw std::invalid_argument("PauliSum width mismatch");
    for (const auto& [s, c] : other.terms_) terms_[s] -= c;
    return *this;
}

PauliSum& PauliSum::operator*=(complex scalar) {
    for (auto& kv : terms_) kv.second *= scalar;
    return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
    if (a.n_qubits_ != b.n_qubits_) throw std::invalid_argument("PauliSum width mismatch");
    PauliSum out(a.n_qubits_);
    for (const auto& [sa, ca] : a.terms_) {
        for (const auto& [sb, cb] : b.terms_) {
            auto [ph, s] = multiply(sa, sb);
            out.terms_[s] += ca * cb * ph;
        }
    }
    return out;
}

Eigen::MatrixXcd PauliSum::to_matrix() const {
    const std::uint64_t dim = std::uint64_t{1} << n_qubits_;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& [s, c] : terms_) {
        const std::uint64_t xm = s.x_mask();
        for (std::uint64_t k = 0; k < dim; ++k) m(k ^ xm, k) += c * s.phase(k);
    }
    return m;
}

Eigen::VectorXcd PauliSum::apply(const Eigen::VectorXcd& state) const {
    const std::uint64_t dim = std::uint64_t{1} << n_qubits_;
    if (static_cast<std::uint64_t>(state.size()) != dim) {
        throw std::invalid_argument("state dimension does not match PauliSum");
    }
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);
    for (const auto& [s, c] : terms_) {
        const std::uint64_t xm = s.x_mask();
        for (std::uint64_t k = 0; k < dim; ++k) out(k ^ xm) += c * s.phase(k) * state(k);
    }
    return out;
}

complex PauliSum::expectation(const Eigen::VectorXcd& state) const { return state.dot(apply(state)); }

std::string PauliSum::str() const {
    std::ostringstream os;
    os.precision(12);
    bool first = true;
    for (const auto& [s, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c << "*" << s.str();
    }
    return os.str();
}

}  // namespace zpqe
