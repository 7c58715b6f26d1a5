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

#include "rotkit/serialize.hpp"

namespace rotkit::serialize {

using nlohmann::json;

json to_json(const DecomposeReport& r) {
    json steps = json::array();
    for (const transfer::Step& s : r.steps.steps) {
        steps.push_back({{"angle_pi", s.angle / kPi},
                         {"axis", s.axis == transfer::Axis::H ? "H1" : "H2"}});
    }
    json j{{"gate", r.gate},
           {"zeta_rad", r.zeta_rad},
           {"steps", steps},
           {"lowenthal_bound", r.lowenthal_bound},
           {"fidelity_full", r.fidelity_full},
           {"fidelity_truncated", r.fidelity_truncated}};
    if (r.axes) {
        j["axes"] = *r.axes;
        j["kappa"] = nullptr;
    } else if (std::isinf(r.kappa)) {
        j["kappa"] = "inf";
    } else {
        j["kappa"] = r.kappa;
    }
    return j;
}

DecomposeReport decompose_from_json(const json& j) {
    DecomposeReport r;
    r.gate = j.at("gate").get<std::string>();
    if (j.contains("axes") && !j["axes"].is_null()) {
        r.axes = j["axes"].get<std::array<double, 6>>();
    } else if (j.at("kappa").is_string()) {
        r.kappa = std::numeric_limits<double>::infinity();
    } else {
        r.kappa = j.at("kappa").get<double>();
    }
    r.zeta_rad = j.at("zeta_rad").get<double>();
    for (const json& s : j.at("steps")) {
        r.steps.steps.push_back(
            {s.at("angle_pi").get<double>() * kPi,
             s.at("axis").get<std::string>() == "H1" ? transfer::Axis::H : transfer::Axis::G});
    }
    r.lowenthal_bound = j.at("lowenthal_bound").get<int>();
    r.fidelity_full = j.at("fidelity_full").get<double>();
    r.fidelity_truncated = j.at("fidelity_truncated").get<double>();
    return r;
}

AxisFrame frame_of(const DecomposeReport& r) {
    if (r.axes) {
        const auto& a = *r.axes;
        return AxisFrame::from_axes(Vec3(a[0], a[1], a[2]), Vec3(a[3], a[4], a[5]));
    }
    return AxisFrame::from_kappa(r.kappa);
}

}  // namespace rotkit::serialize
