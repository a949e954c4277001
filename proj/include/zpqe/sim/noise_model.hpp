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
#include <filesystem>
#include <istream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "zpqe/circuit/gate.hpp"

namespace zpqe {

inline constexpr double kInfiniteTime = std::numeric_limits<double>::infinity();

/// Single-qubit readout confusion: rows [p(0|0) p(1|0); p(0|1) p(1|1)].
struct ReadoutConfusion {
    double p1_given_0 = 0.0;
    double p0_given_1 = 0.0;

    double p0_given_0() const { return 1.0 - p1_given_0; }
    double p1_given_1() const { return 1.0 - p0_given_1; }
    bool is_identity() const { return p1_given_0 == 0.0 && p0_given_1 == 0.0; }
};

/// Gate noise (depolarizing, then thermal relaxation on each involved qubit)
/// and readout confusion. Per-qubit vectors of length 1 apply to every qubit.
///
/// Text form (INI):
///
///     [noise]
///     p_depol_1q = 0.001
///     p_depol_2q = 0.01
///     t1_us = 100            ; or a comma list per qubit; "inf" disables
///     t2_us = 80
///     readout_p1_given_0 = 0.02
///     readout_p0_given_1 = 0.02
///     [durations_ns]
///     x = 35
///     cx = 300
struct NoiseModel {
    std::string name = "custom";
    double p_depol_1q = 0.0;
    double p_depol_2q = 0.0;
    std::vector<double> t1_us{kInfiniteTime};
    std::vector<double> t2_us{kInfiniteTime};
    std::array<std::optional<double>, kNumGateKinds> durations_ns{};
    std::vector<ReadoutConfusion> readout{ReadoutConfusion{}};

    /// No noise at all; every gate kind has zero duration.
    static NoiseModel ideal();
    /// p1 = 0.001, p2 = 0.01, T1 = 100 us, T2 = 80 us, readout flip 0.02,
    /// 35 ns one-qubit and 300 ns two-qubit basis gates (x, sx, sxdg, rz, cx).
    static NoiseModel nisq_light();
    /// "none" / "nisq-light"; otherwise throws std::invalid_argument.
    static NoiseModel preset(const std::string& name);
    static NoiseModel parse(std::istream& in, const std::string& name = "custom");
    static NoiseModel load(const std::filesystem::path& path);
    /// Preset name or path to an INI file.
    static NoiseModel from_spec(const std::string& preset_or_path);

    /// Throws std::invalid_argument on probabilities outside [0, 1], T2 > 2 T1,
    /// negative durations, or readout rows that do not sum to one.
    void validate() const;

    bool is_ideal() const;
    bool has_gate_noise() const;
    bool has_readout_error() const;

    double t1(std::size_t q) const { return t1_us.size() == 1 ? t1_us[0] : t1_us.at(q); }
    double t2(std::size_t q) const { return t2_us.size() == 1 ? t2_us[0] : t2_us.at(q); }
    const ReadoutConfusion& readout_for(std::size_t q) const {
        return readout.size() == 1 ? readout[0] : readout.at(q);
    }
    /// Throws std::invalid_argument when the kind has no duration entry.
    double duration_us(GateKind kind) const;

    std::string to_ini() const;
};

}  // namespace zpqe
