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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "zpqe/circuit/folding.hpp"
#include "zpqe/common/seed.hpp"

namespace zpqe {

std::string_view fold_mode_name(FoldMode mode) {
    switch (mode) {
        case FoldMode::Global: return "global";
        case FoldMode::LocalAll: return "local_all";
        case FoldMode::LocalLeft: return "local_left";
        case FoldMode::LocalRight: return "local_right";
        case FoldMode::LocalRandom: return "local_random";
    }
    return "?";
}

FoldMode parse_fold_mode(std::string_view name) {
    for (FoldMode m : {FoldMode::Global, FoldMode::LocalAll, FoldMode::LocalLeft, FoldMode::LocalRight,
                       FoldMode::LocalRandom}) {
        if (fold_mode_name(m) == name) return m;
    }
    throw std::invalid_argument("unknown fold mode '" + std::string(name) + "'");
}

Circuit fold_global(const Circuit& circuit, int n) {
    if (n < 0) throw std::invalid_argument("fold count must be non-negative");
    Circuit out = circuit;
    const Circuit inv = circuit.inverse();
    for (int k = 0; k < n; ++k) {
        out.append(inv);
        out.append(circuit);
    }
    return out;
}

namespace {

struct FoldCounts {
    std::size_t n = 0;  // full fold pairs on every gate
    std::size_t s = 0;  // gates receiving one extra pair
};

FoldCounts fold_counts(std::size_t g, double lambda) {
    if (!(lambda >= 1.0) || !std::isfinite(lambda)) {
        throw std::invalid_argument("scale factor lambda must be >= 1");
    }
    FoldCounts fc;
    fc.n = static_cast<std::size_t>(std::floor((lambda - 1.0) / 2.0));
    const double remainder = lambda - static_cast<double>(2 * fc.n + 1);
    fc.s = std::min(g, static_cast<std::size_t>(std::llround(static_cast<double>(g) * remainder / 2.0)));
    return fc;
}

double achieved(std::size_t g, std::size_t folded_size) {
    return g == 0 ? 1.0 : static_cast<double>(folded_size) / static_cast<double>(g);
}

}  // namespace

FoldedCircuit fold_local(const Circuit& circuit, const FoldSpec& spec) {
    const std::size_t g = circuit.size();
    const FoldCounts fc = fold_counts(g, spec.lambda);

    std::vector<char> extra(g, 0);
    switch (spec.mode) {
        case FoldMode::LocalLeft:
        case FoldMode::Global:
            std::fill_n(extra.begin(), fc.s, 1);
            break;
        case FoldMode::LocalRight:
            std::fill_n(extra.rbegin(), fc.s, 1);
            break;
        case FoldMode::LocalAll:
            for (std::size_t k = 0; k < fc.s; ++k) {
                extra[static_cast<std::size_t>((static_cast<double>(k) + 0.5) * static_cast<double>(g) /
                                               static_cast<double>(fc.s))] = 1;
            }
            break;
        case FoldMode::LocalRandom: {
            std::vector<std::size_t> idx(g);
            std::iota(idx.begin(), idx.end(), std::size_t{0});
            Rng rng(spec.seed);
            // partial Fisher-Yates: the first s entries are a uniform s-subset
            for (std::size_t k = 0; k < fc.s; ++k) {
                std::uniform_int_distribution<std::size_t> pick(k, g - 1);
                std::swap(idx[k], idx[pick(rng)]);
                extra[idx[k]] = 1;
            }
            break;
        }
    }

    Circuit out(circuit.num_qubits());
    for (std::size_t k = 0; k < g; ++k) {
        const Gate& gate = circuit[k];
        const Gate inv = gate.inverse();
        out.append(gate);
        const std::size_t pairs = fc.n + static_cast<std::size_t>(extra[k]);
        for (std::size_t p = 0; p < pairs; ++p) {
            out.append(inv);
            out.append(gate);
        }
    }
    FoldedCircuit result{std::move(out), 1.0, spec.lambda};
    result.achieved_lambda = achieved(g, result.circuit.size());
    return result;
}

FoldedCircuit fold(const Circuit& circuit, const FoldSpec& spec) {
    if (spec.mode != FoldMode::Global) return fold_local(circuit, spec);
    const std::size_t g = circuit.size();
    const FoldCounts fc = fold_counts(g, spec.lambda);
    Circuit out = fold_global(circuit, static_cast<int>(fc.n));
    if (fc.s > 0) {
        Circuit tail(circuit.num_qubits());
        for (std::size_t k = g - fc.s; k < g; ++k) tail.append(circuit[k]);
        out.append(tail.inverse());
        out.append(tail);
    }
    FoldedCircuit result{std::move(out), 1.0, spec.lambda};
    result.achieved_lambda = achieved(g, result.circuit.size());
    return result;
}

}  // namespace zpqe
