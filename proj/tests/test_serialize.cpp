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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rotkit/fidelity.hpp"
#include "rotkit/gates.hpp"
#include "rotkit/serialize.hpp"
#include "rotkit/table.hpp"
#include "test_helpers.hpp"

using namespace rotkit;
using namespace rotkit::testing;

namespace {

serialize::DecomposeReport make_report(const std::string& name, double kappa) {
    const Mat2 u = *gates::gate_by_name(name);
    const AxisFrame frame = AxisFrame::from_kappa(kappa);
    const auto dec = decomp::generalized_euler_angles(so3_from_su2(u), frame);
    serialize::DecomposeReport r;
    r.gate = name;
    r.kappa = kappa;
    r.zeta_rad = frame.zeta;
    r.steps = dec.sequence;
    r.lowenthal_bound = decomp::lowenthal_bound(frame.zeta);
    r.fidelity_full = fidelity::gate_fidelity(u, decomp::reconstruct_su2(dec.sequence, frame));
    r.fidelity_truncated = fidelity::gate_fidelity(
        u, decomp::reconstruct_su2(table::truncate_angles(dec.sequence, 4), frame));
    return r;
}

}  // namespace

TEST_CASE("json schema keys") {
    const nlohmann::json j = serialize::to_json(make_report("T", 5.0));
    for (const char* key : {"gate", "kappa", "zeta_rad", "steps", "lowenthal_bound",
                            "fidelity_full", "fidelity_truncated"}) {
        CHECK(j.contains(key));
    }
    CHECK(j["gate"] == "T");
    CHECK(j["steps"].size() == 3);
    CHECK((j["steps"][0]["axis"] == "H1" || j["steps"][0]["axis"] == "H2"));
    const nlohmann::json jinf =
        serialize::to_json(make_report("S", std::numeric_limits<double>::infinity()));
    CHECK(jinf["kappa"] == "inf");
}

TEST_CASE("round-trip reproduces the reported fidelity") {
    for (double kappa : {1.0, 5.0, 100.0, std::numeric_limits<double>::infinity()}) {
        for (const char* name : {"T", "S", "Had", "Ky"}) {
            const serialize::DecomposeReport orig = make_report(name, kappa);
            const nlohmann::json j = serialize::to_json(orig);
            const serialize::DecomposeReport back =
                serialize::decompose_from_json(nlohmann::json::parse(j.dump()));
            const AxisFrame frame = serialize::frame_of(back);
            const Mat2 u = *gates::gate_by_name(name);
            const double fid =
                fidelity::gate_fidelity(u, decomp::reconstruct_su2(back.steps, frame));
            CHECK(std::abs(fid - back.fidelity_full) < 1e-12);
        }
    }
}

TEST_CASE("reference table rows") {
    const auto rows = table::compute_table();
    REQUIRE(rows.size() == 36);
    int equivalent = 0;
    for (const auto& r : rows) {
        CHECK(r.match != table::AngleMatch::Mismatch);
        if (r.match == table::AngleMatch::Equivalent) ++equivalent;
        CHECK(r.e0_delta < 2e-4);
        CHECK(r.fidelity_full >= 1.0 - 1e-9);
    }
    // a single equivalent-presentation row is expected (Ky over orthogonal axes)
    CHECK(equivalent == 1);
}
