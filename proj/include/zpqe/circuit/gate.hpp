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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace zpqe {

/// SXdg (the adjoint of SX) is not a device basis gate; it only appears as the
/// literal inverse inserted by folding.
enum class GateKind : std::uint8_t { X, SX, SXdg, RZ, RX, RY, H, CX };

inline constexpr std::size_t kNumGateKinds = 8;

std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);
std::size_t gate_arity(GateKind kind);
bool gate_has_param(GateKind kind);

struct Gate {
    GateKind kind = GateKind::X;
    std::array<std::size_t, 2> qubits{0, 0};  // qubits[1] is the CX target
    double param = 0.0;                       // radians; RZ/RX/RY only

    static Gate x(std::size_t q) { return {GateKind::X, {q, 0}, 0.0}; }
    static Gate sx(std::size_t q) { return {GateKind::SX, {q, 0}, 0.0}; }
    static Gate sxdg(std::size_t q) { return {GateKind::SXdg, {q, 0}, 0.0}; }
    static Gate h(std::size_t q) { return {GateKind::H, {q, 0}, 0.0}; }
    static Gate rz(std::size_t q, double theta) { return {GateKind::RZ, {q, 0}, theta}; }
    static Gate rx(std::size_t q, double theta) { return {GateKind::RX, {q, 0}, theta}; }
    static Gate ry(std::size_t q, double theta) { return {GateKind::RY, {q, 0}, theta}; }
    static Gate cx(std::size_t control, std::size_t target) { return {GateKind::CX, {control, target}, 0.0}; }

    std::size_t arity() const { return gate_arity(kind); }

    /// Exact inverse as a single gate: RZ(t) -> RZ(-t), SX -> SXdg, self-inverse gates unchanged.
    Gate inverse() const;

    /// 2x2 for one-qubit gates; 4x4 for CX in the basis |target control> with
    /// control as the low bit (index = c + 2 t).
    Eigen::MatrixXcd matrix() const;

    std::string str() const;

    bool operator==(const Gate&) const = default;
};

}  // namespace zpqe
