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

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "zpqe/circuit/circuit.hpp"
#include "zpqe/common/seed.hpp"
#include "zpqe/operator/pauli.hpp"
#include "zpqe/sim/density_matrix.hpp"
#include "zpqe/sim/noise_model.hpp"

namespace zpqe {

inline constexpr std::size_t kDefaultMaxQubits = 12;

/// Ideal gate action, then depolarizing on the gate's qubits (one- or
/// two-qubit strength), then thermal relaxation on each involved qubit for the
/// gate's duration.
void apply_gate_with_noise(DensityMatrix& rho, const Gate& gate, const NoiseModel& model);

/// Final density matrix of `circuit` from |0...0>. Throws std::length_error
/// above `max_qubits`.
DensityMatrix simulate(const Circuit& circuit, const NoiseModel& model, std::size_t max_qubits = kDefaultMaxQubits);

/// Tensor product of the model's single-qubit confusion matrices applied to a
/// distribution over 2^n bitstrings.
std::vector<double> apply_readout_confusion(std::span<const double> ideal_probs, const NoiseModel& model);

struct MeasurementOutcome {
    std::map<std::uint64_t, std::size_t> counts;  // basis index -> count
    std::size_t shots = 0;
};

/// Multinomial sample of `shots` outcomes from `probs`.
MeasurementOutcome sample_counts(std::span<const double> probs, std::size_t shots, Rng& rng);

/// Measurement statistics of a Pauli-sum observable on a fixed state. Each
/// non-identity term is measured separately: noiseless basis rotation, readout
/// confusion, then `shots` independent draws averaged with the term's +-1
/// eigenvalues. Distributions are shared between terms with the same
/// measurement basis.
class ObservableEstimator {
  public:
    ObservableEstimator(const DensityMatrix& rho, const PauliSum& observable, const NoiseModel& model);

    /// Expectation under the readout-distorted distributions (no shot noise).
    double exact() const;

    /// One shot-based estimate. shots == 0 returns exact().
    double sample(std::size_t shots, Rng& rng) const;

  private:
    struct Term {
        double coeff;
        std::uint64_t support;
        std::size_t distribution;
    };
    double identity_ = 0.0;
    std::vector<Term> terms_;
    std::vector<std::vector<double>> distributions_;
};

/// simulate + ObservableEstimator with an Rng seeded by `seed`.
double estimate_expectation(const Circuit& circuit, const PauliSum& observable, const NoiseModel& model,
                            std::size_t shots, std::uint64_t seed);

}  // namespace zpqe
