// Copyright 2026 The rotkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "rotkit/euler_decomp.hpp"

// Machine-readable reports.  The decomposition schema is stable:
//   { "gate": str, "kappa": number|"inf", "zeta_rad": number,
//     "steps": [{"angle_pi": number, "axis": "H1"|"H2"}],
//     "lowenthal_bound": int,
//     "fidelity_full": number, "fidelity_truncated": number }
// Frames given by explicit axes carry an extra "axes" array instead of a
// numeric kappa.
namespace rotkit::serialize {

struct DecomposeReport {
    std::string gate;
    double kappa = std::numeric_limits<double>::infinity();
    std::optional<std::array<double, 6>> axes;  // hx,hy,hz,gx,gy,gz when not a kappa frame
    double zeta_rad = 0.0;
    transfer::EulerSequence steps;  // full-precision angles
    int lowenthal_bound = 0;
    double fidelity_full = 1.0;
    double fidelity_truncated = 1.0;
};

nlohmann::json to_json(const DecomposeReport& report);
DecomposeReport decompose_from_json(const nlohmann::json& j);

// Frame recovery for round-tripping a parsed report.
AxisFrame frame_of(const DecomposeReport& report);

}  // namespace rotkit::serialize
