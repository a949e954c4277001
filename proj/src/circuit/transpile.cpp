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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zpqe/circuit/folding.hpp"

namespace zpqe {

GateSet default_basis() { return {GateKind::CX, GateKind::RZ, GateKind::SX, GateKind::X}; }

namespace {

constexpr double kPi = std::numbers::pi;

bool near(double a, double b) { return std::abs(a - b) < 1e-12; }

void emit(Circuit& out, const Gate& g, const GateSet& basis);

void emit_rz(Circuit& out, std::size_t q, double theta) {
    out.append(Gate::rz(q, theta));
}

// U(theta, phi, lam) = RZ(phi + pi) SX RZ(theta + pi) SX RZ(lam), up to phase.
void emit_u3(Circuit& out, std::size_t q, double theta, double phi, double lam) {
    if (!near(lam, 0.0)) emit_rz(out, q, lam);
    out.append(Gate::sx(q));
    emit_rz(out, q, theta + kPi);
    out.append(Gate::sx(q));
    emit_rz(out, q, phi + kPi);
}

void emit(Circuit& out, const Gate& g, const GateSet& basis) {
    if (basis.contains(g.kind)) {
        out.append(g);
        return;
    }
    const std::size_t q = g.qubits[0];
    switch (g.kind) {
        case GateKind::H:
            emit_rz(out, q, kPi / 2);
            out.append(Gate::sx(q));
            emit_rz(out, q, kPi / 2);
            break;
        case GateKind::SXdg:
            emit_rz(out, q, kPi);
            out.append(Gate::sx(q));
            emit_rz(out, q, kPi);
            break;
        case GateKind::RX:
            if (near(g.param, kPi / 2)) {
                out.append(Gate::sx(q));
            } else if (near(g.param, -kPi / 2)) {
                emit(out, Gate::sxdg(q), basis);
            } else {
                emit_u3(out, q, g.param, -kPi / 2, kPi / 2);
            }
            break;
        case GateKind::RY:
            emit_u3(out, q, g.param, 0.0, 0.0);
            break;
        case GateKind::X:
        case GateKind::SX:
        case GateKind::RZ:
        case GateKind::CX:
            throw std::logic_error("basis gate reached decomposition");
    }
}

}  // namespace

Circuit transpile(const Circuit& circuit, const GateSet& basis) {
    for (GateKind k : {GateKind::CX, GateKind::RZ, GateKind::SX, GateKind::X}) {
        if (!basis.contains(k)) {
            throw std::invalid_argument("unsupported target basis: must contain cx, rz, sx and x");
        }
    }
    Circuit out(circuit.num_qubits());
    for (const Gate& g : circuit.gates()) emit(out, g, basis);
    return out;
}

}  // namespace zpqe
