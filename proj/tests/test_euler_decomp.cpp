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

#include "rotkit/euler_decomp.hpp"
#include "rotkit/fidelity.hpp"
#include "rotkit/gates.hpp"
#include "rotkit/table.hpp"
#include "test_helpers.hpp"

using namespace rotkit;
using namespace rotkit::decomp;
using namespace rotkit::testing;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> angles_pi(const EulerSequence& s, std::size_t n) {
    return table::dense_angles(s, n);
}
}  // namespace

TEST_CASE("identity decomposes to the empty sequence") {
    const DecompositionResult d =
        generalized_euler_angles(Mat3::Identity(), AxisFrame::from_kappa(5.0));
    CHECK(d.sequence.empty());
    CHECK(d.residual == 0.0);
    // The raw assembly keeps the 3-step structure.
    CHECK(d.assembled.size() == 3);
}

TEST_CASE("half-turn about x over the orthogonal (z, x) frame") {
    // diag(1,-1,-1) over h = z, g = x comes out as the bare g half-turn; the
    // equivalent padded form (3/2 pi, pi, 3/2 pi) realizes the same rotation.
    const AxisFrame f = AxisFrame::from_axes(Vec3::UnitZ(), Vec3::UnitX());
    const Mat3 rx = Vec3(1, -1, -1).asDiagonal();
    const DecompositionResult d = generalized_euler_angles(rx, f);
    CHECK(d.residual < 1e-12);
    REQUIRE(d.sequence.size() == 1);
    CHECK(d.sequence.steps[0].axis == transfer::Axis::G);
    CHECK(d.sequence.steps[0].angle == doctest::Approx(kPi));

    const EulerSequence padded{{{1.5 * kPi, transfer::Axis::H},
                                {kPi, transfer::Axis::G},
                                {1.5 * kPi, transfer::Axis::H}}};
    CHECK((reconstruct(padded, f) - rx).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("T gate over the kappa = 5 frame") {
    const Mat2 t = *gates::gate_by_name("T");
    const AxisFrame f = AxisFrame::from_kappa(5.0);
    const DecompositionResult d = generalized_euler_angles(so3_from_su2(t), f);
    CHECK(d.residual < 1e-12);
    const std::vector<double> a = angles_pi(d.sequence, 3);
    CHECK(std::abs(a[0] - 0.0264) < 1e-4);
    CHECK(std::abs(a[1] - 1.7448) < 1e-4);
    CHECK(std::abs(a[2] - 0.0264) < 1e-4);
}

TEST_CASE("reconstruct basics") {
    const AxisFrame f = AxisFrame::from_kappa(2.0);
    CHECK((reconstruct({}, f) - Mat3::Identity()).cwiseAbs().maxCoeff() == 0.0);

    const EulerSequence two{{{kPi, transfer::Axis::G}, {kPi, transfer::Axis::H}}};
    const Mat3 want = rotation_about_axis(f.h, kPi) * rotation_about_axis(f.g, kPi);
    CHECK((reconstruct(two, f) - want).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("reconstruct_su2") {
    const AxisFrame f = AxisFrame::from_kappa(10.0);
    CHECK((reconstruct_su2({}, f) - Mat2::Identity()).cwiseAbs().maxCoeff() == 0.0);

    // one full turn picks up the SU(2) sign
    const EulerSequence turn{{{kTwoPi, transfer::Axis::H}}};
    CHECK((reconstruct_su2(turn, f) + Mat2::Identity()).cwiseAbs().maxCoeff() < 1e-12);

    SUBCASE("S-gate reference angles at kappa = 10") {
        const Mat2 s = *gates::gate_by_name("S");
        const EulerSequence seq{{{0.0319 * kPi, transfer::Axis::H},
                                 {1.4968 * kPi, transfer::Axis::G},
                                 {0.0319 * kPi, transfer::Axis::H}}};
        CHECK(1.0 - fidelity::gate_fidelity(s, reconstruct_su2(seq, f)) < 3e-9);
    }
    SUBCASE("Hadamard reference angles at kappa = 100") {
        const Mat2 had = *gates::gate_by_name("Had");
        const AxisFrame f100 = AxisFrame::from_kappa(100.0);
        const EulerSequence seq{{{1.5032 * kPi, transfer::Axis::H},
                                 {1.5000 * kPi, transfer::Axis::G},
                                 {1.5032 * kPi, transfer::Axis::H}}};
        CHECK(fidelity::gate_fidelity(had, reconstruct_su2(seq, f100)) >= 1.0 - 3e-9);
    }
    SUBCASE("double cover consistency") {
        auto g = rng(31);
        for (int i = 0; i < 200; ++i) {
            const AxisFrame fr = random_frame(g, uniform(g, 0.2, kPi / 2));
            const DecompositionResult d =
                generalized_euler_angles(so3_from_su2(random_su2(g)), fr);
            const Mat3 lifted = so3_from_su2(reconstruct_su2(d.sequence, fr));
            CHECK((lifted - reconstruct(d.sequence, fr)).cwiseAbs().maxCoeff() < 1e-11);
        }
    }
}

TEST_CASE("random exactness, structure and the step bound") {
    auto g = rng(32);
    for (int i = 0; i < 1000; ++i) {
        const double zeta = uniform(g, 10.0, 90.0) * kPi / 180.0;
        const AxisFrame f = random_frame(g, zeta);
        const Mat3 r = so3_from_su2(random_su2(g));
        const DecompositionResult d = generalized_euler_angles(r, f);
        CHECK(d.residual < 1e-9);
        CHECK(static_cast<int>(d.sequence.size()) <= lowenthal_bound(zeta));
        // raw assembly: 3 steps when p = 0, else 2p + 3 (antipodal route
        // prepends one more), axes alternating starting at H
        const std::size_t want = (d.ladder_count == 0 ? 3 : 2 * d.ladder_count + 3) +
                                 (d.antipodal_route ? 1 : 0);
        CHECK(d.assembled.size() == want);
        for (std::size_t k = d.antipodal_route ? 1 : 0; k < d.assembled.size(); ++k) {
            const auto axis = d.assembled.steps[k].axis;
            const bool even = ((k - (d.antipodal_route ? 1 : 0)) % 2) == 0;
            CHECK(axis == (even ? transfer::Axis::H : transfer::Axis::G));
        }
    }
}

TEST_CASE("obtuse frames reduce through the reflection") {
    auto g = rng(33);
    for (int i = 0; i < 300; ++i) {
        const double zeta = uniform(g, 91.0, 175.0) * kPi / 180.0;
        const AxisFrame f = random_frame(g, zeta);
        const Mat3 r = so3_from_su2(random_su2(g));
        const DecompositionResult d = generalized_euler_angles(r, f);
        CHECK(d.reflected_frame);
        CHECK(d.residual < 1e-9);
        CHECK(static_cast<int>(d.sequence.size()) <= lowenthal_bound(zeta));
    }
}

TEST_CASE("orthogonal limit matches the standard decomposition") {
    const AxisFrame ortho = AxisFrame::from_kappa(kInf);
    auto g = rng(34);
    for (int i = 0; i < 200; ++i) {
        const Mat2 w = random_su2(g);
        const DecompositionResult d = generalized_euler_angles(so3_from_su2(w), ortho);
        CHECK(d.sequence.size() <= 3);
        CHECK(d.residual < 1e-10);
        const EulerSequence std_seq = standard_euler_angles(w);
        CHECK(1.0 - fidelity::gate_fidelity(w, reconstruct_su2(std_seq, ortho)) < 1e-10);
        // both reconstruct the same gate; angle lists need not match
        CHECK(1.0 - fidelity::gate_fidelity(w, reconstruct_su2(d.sequence, ortho)) < 1e-10);
    }
}

TEST_CASE("standard_euler_angles edge cases") {
    CHECK(standard_euler_angles(Mat2::Identity()).empty());

    // pure z gates come out as a single G step
    const Mat2 t = *gates::gate_by_name("T");
    const EulerSequence seq = standard_euler_angles(t);
    REQUIRE(seq.size() == 1);
    CHECK(seq.steps[0].axis == transfer::Axis::G);
    CHECK(seq.steps[0].angle == doctest::Approx(1.75 * kPi));

    const AxisFrame ortho = AxisFrame::from_kappa(kInf);
    const Mat2 had = *gates::gate_by_name("Had");
    CHECK(1.0 - fidelity::gate_fidelity(had,
                                        reconstruct_su2(standard_euler_angles(had), ortho)) <
          1e-10);
}

TEST_CASE("determinism: identical inputs give bitwise-identical sequences") {
    auto g = rng(35);
    const AxisFrame f = random_frame(g, 0.9);
    const Mat3 r = so3_from_su2(random_su2(g));
    const DecompositionResult a = generalized_euler_angles(r, f);
    const DecompositionResult b = generalized_euler_angles(r, f);
    REQUIRE(a.sequence.size() == b.sequence.size());
    for (std::size_t i = 0; i < a.sequence.size(); ++i) {
        CHECK(a.sequence.steps[i].angle == b.sequence.steps[i].angle);
        CHECK(a.sequence.steps[i].axis == b.sequence.steps[i].axis);
    }
}

TEST_CASE("lowenthal bounds") {
    CHECK(lowenthal_bound(kPi / 2) == 3);
    CHECK(lowenthal_bound_kappa(std::numeric_limits<double>::infinity()) == 3);
    CHECK(lowenthal_bound_kappa(1.0) == 5);
    // kappa > sqrt(3): zeta > pi/3, bound 4
    CHECK(lowenthal_bound_kappa(2.0) == 4);
    CHECK(lowenthal_bound_kappa(5.0) == 4);
    CHECK(lowenthal_bound_kappa(100.0) == 4);
    // tan(pi/5) < kappa < 1: bound 6
    CHECK(lowenthal_bound_kappa(0.8) == 6);
    const double tan_pi5 = std::sqrt(1.0 / (std::cos(kPi / 5) * std::cos(kPi / 5)) - 1.0);
    CHECK(lowenthal_bound_kappa(tan_pi5 + 1e-9) == 6);
    // obtuse angles fold onto their supplement
    CHECK(lowenthal_bound(kPi - kPi / 3) == lowenthal_bound(kPi / 3));
}

TEST_CASE("gates registry and target forms") {
    for (const std::string& name : gates::gate_names()) {
        const auto g = gates::gate_by_name(name);
        REQUIRE(g.has_value());
        CHECK(is_special_unitary(*g, 1e-12));
    }
    CHECK_FALSE(gates::gate_by_name("nope").has_value());

    SUBCASE("target forms interconvert") {
        auto g = rng(36);
        for (int i = 0; i < 100; ++i) {
            const double phi = uniform(g, -3, 3);
            const Vec3 n = random_unit(g);
            const gates::TargetGate tg = gates::TargetGate::from_generator(phi, n);
            const gates::TargetGate tu = gates::TargetGate::from_unitary(tg.su2());
            const gates::TargetGate tr = gates::TargetGate::from_rotation(tg.so3());
            CHECK((tu.so3() - tg.so3()).cwiseAbs().maxCoeff() < 1e-11);
            CHECK((tr.so3() - tg.so3()).cwiseAbs().maxCoeff() < 1e-11);
        }
    }
}
