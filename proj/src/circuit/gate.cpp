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

#include "zpqe/circuit/gate.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

namespace zpqe {

namespace {
constexpr std::array<std::string_view, kNumGateKinds> kNames = {"x", "sx", "sxdg", "rz", "rx", "ry", "h", "cx"};
}

std::string_view gate_name(GateKind kind) { return kNames[static_cast<std::size_t>(kind)]; }

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
    for (std::size_t k = 0; k < kNames.size(); ++k) {
        if (kNames[k] == name) return static_cast<GateKind>(k);
    }
    return std::nullopt;
}

std::size_t gate_arity(GateKind kind) { return kind == GateKind::CX ? 2 : 1; }

bool gate_has_param(GateKind kind) {
    return kind == GateKind::RZ || kind == GateKind::RX || kind == GateKind::RY;
}

Gate Gate::inverse() const {
    Gate g = *this;
    switch (kind) {
        case GateKind::SX: g.kind = GateKind::SXdg; break;
        case GateKind::SXdg: g.kind = GateKind::SX; break;
        case GateKind::RZ:
        case GateKind::RX:
        case GateKind::RY: g.param = -param; break;
        case GateKind::X:
        case GateKind::H:
        case GateKind::CX: break;
    }
    return g;
}

Eigen::MatrixXcd Gate::matrix() const {
    using C = std::complex<double>;
    const C i(0, 1);
    Eigen::MatrixXcd m(2, 2);
    const double c = std::cos(param / 2);
    const double s = std::sin(param / 2);
    switch (kind) {
        case GateKind::X: m << 0, 1, 1, 0; break;
        case GateKind::SX: m << C(0.5, 0.5), C(0.5, -0.5), C(0.5, -0.5), C(0.5, 0.5); break;
        case GateKind::SXdg: m << C(0.5, -0.5), C(0.5, 0.5), C(0.5, 0.5), C(0.5, -0.5); break;
        case GateKind::RZ: m << std::exp(-i * (param / 2)), 0, 0, std::exp(i * (param / 2)); break;
        case GateKind::RX: m << c, -i * s, -i * s, c; break;
        case GateKind::RY: m << c, -s, s, c; break;
        case GateKind::H: m << std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2, -std::numbers::sqrt2 / 2; break;
        case GateKind::CX: {
            // index = control + 2 * target; flips target when control = 1
            Eigen::MatrixXcd cx = Eigen::MatrixXcd::Zero(4, 4);
            cx(0, 0) = 1;
            cx(2, 2) = 1;
            cx(3, 1) = 1;
            cx(1, 3) = 1;
            return cx;
        }
    }
    return m;
}

std::string Gate::str() const {
    std::ostringstream os;
    os << gate_name(kind) << ' ' << qubits[0];
    if (arity() == 2) os << ',' << qubits[1];
    if (gate_has_param(kind)) {
        os.precision(17);
        os << ' ' << param;
    }
    return os.str();
}

}  // namespace zpqe
