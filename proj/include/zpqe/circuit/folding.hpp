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

#include <bitset>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <string_view>

#include "zpqe/circuit/circuit.hpp"

namespace zpqe {

class GateSet {
  public:
    GateSet() = default;
    GateSet(std::initializer_list<GateKind> kinds) {
        for (GateKind k : kinds) insert(k);
    }
    void insert(GateKind k) { bits_.set(static_cast<std::size_t>(k)); }
    bool contains(GateKind k) const { return bits_.test(static_cast<std::size_t>(k)); }
    bool operator==(const GateSet&) const = default;

  private:
    std::bitset<kNumGateKinds> bits_;
};

/// {CX, RZ, SX, X}.
GateSet default_basis();

/// Rewrites every gate outside `basis` into RZ/SX/X/CX sequences. The unitary
/// is preserved up to a global phase. Throws std::invalid_argument unless the
/// basis contains {CX, RZ, SX, X}.
Circuit transpile(const Circuit& circuit, const GateSet& basis = default_basis());

enum class FoldMode { Global, LocalAll, LocalLeft, LocalRight, LocalRandom };

std::string_view fold_mode_name(FoldMode mode);
FoldMode parse_fold_mode(std::string_view name);

struct FoldSpec {
    double lambda = 1.0;
    FoldMode mode = FoldMode::LocalRandom;
    std::uint64_t seed = 0;
};

struct FoldedCircuit {
    Circuit circuit;
    double achieved_lambda = 1.0;  // folded gate count / original gate count
    double requested_lambda = 1.0;
};

/// U -> U (U^dagger U)^n.
Circuit fold_global(const Circuit& circuit, int n);

/// Per-gate folding G -> G (G^dagger G)^n with n = floor((lambda - 1) / 2),
/// plus one extra fold pair on s = round(g (lambda - (2n + 1)) / 2) gates chosen
/// by the mode: the first s (left), the last s (right), s distinct gates drawn
/// from the seed (random), or s evenly spaced gates (all).
FoldedCircuit fold_local(const Circuit& circuit, const FoldSpec& spec);

/// Dispatches on spec.mode. Global mode realizes the fractional remainder by
/// appending L^dagger L for the final s gates L.
FoldedCircuit fold(const Circuit& circuit, const FoldSpec& spec);

}  // namespace zpqe
