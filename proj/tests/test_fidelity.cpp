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
#include "test_helpers.hpp"

using namespace rotkit;
using namespace rotkit::fidelity;
using namespace rotkit::testing;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Direct-matrix route: z-rotation by beta about z vs about the tilted axis.
double direct_tilted_fidelity(double beta, double epsilon) {
    const double zeta = (1.0 - epsilon) * kPi / 2;
    const Vec3 tilted(std::cos(zeta), 0.0, std::sin(zeta));
    const Mat2 ideal = su2_exp({0.5 * beta * Vec3::UnitZ()}, 1.0);
    const Mat2 actual = su2_exp({0.5 * beta * tilted}, 1.0);
    return gate_fidelity(ideal, actual);
}

transfer::EulerSequence standard_sequence(const Mat2& gate) {
    return decomp::generalized_euler_angles(so3_from_su2(gate), AxisFrame::from_kappa(kInf))
        .sequence;
}

}  // namespace

TEST_CASE("gate_fidelity") {
    auto g = rng(41);
    const Mat2 u = random_su2(g);
    CHECK(gate_fidelity(u, u) == doctest::Approx(1.0));
    CHECK(gate_fidelity(Mat2::Identity(), su2_exp({0.5 * kPi * Vec3::UnitX()}, 1.0)) ==
          doctest::Approx(0.0));
    SUBCASE("global phase invariance") {
        for (int i = 0; i < 50; ++i) {
            const Mat2 v = random_su2(g);
            const double phase = uniform(g, 0, kTwoPi);
            CHECK(gate_fidelity(v, Mat2(std::exp(Cplx(0, phase)) * v)) ==
                  doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("tilt model chain") {
    auto g = rng(42);
    for (int i = 0; i < 100; ++i) {
        const double kappa = std::exp(uniform(g, std::log(0.01), std::log(1e4)));
        const TiltModel m = TiltModel::from_kappa(kappa);
        CHECK(std::abs(std::cos(m.zeta) - 1.0 / std::sqrt(1 + kappa * kappa)) < 1e-12);
        CHECK(std::abs(std::sin(m.zeta) - std::cos(m.epsilon * kPi / 2)) < 1e-12);
        // kappa -> zeta -> epsilon -> kappa closes to 1e-12 (relative)
        CHECK(TiltModel::from_epsilon(m.epsilon).kappa == doctest::Approx(kappa).epsilon(1e-12));
        // the zeta -> kappa leg is intrinsically ill-conditioned near pi/2
        // (d kappa / d zeta ~ kappa^2), so it only closes to ~kappa ulps
        CHECK(TiltModel::from_zeta(m.zeta).kappa == doctest::Approx(kappa).epsilon(1e-11));
    }
}

TEST_CASE("tilted_z_fidelity closed form") {
    CHECK(tilted_z_fidelity(1.234, 0.0) == doctest::Approx(1.0));
    SUBCASE("worst case at beta = pi") {
        for (double eps : {0.1, 0.3, 0.5, 0.9}) {
            CHECK(tilted_z_fidelity(kPi, eps) ==
                  doctest::Approx(std::abs(std::cos(eps * kPi / 2))).epsilon(1e-12));
        }
    }
    SUBCASE("matches the direct trace computation") {
        auto g = rng(43);
        for (int i = 0; i < 1000; ++i) {
            const double beta = uniform(g, 0, kTwoPi);
            const double eps = uniform(g, 0, 0.999);
            CHECK(std::abs(tilted_z_fidelity(beta, eps) - direct_tilted_fidelity(beta, eps)) <
                  1e-12);
        }
    }
}

TEST_CASE("average tilt error") {
    CHECK(average_tilt_error(0.0) == 0.0);
    CHECK(average_tilt_error(0.5) == doctest::Approx(0.5 * (1 - std::cos(kPi / 4))));
    SUBCASE("Monte-Carlo agreement within 3 standard errors") {
        auto g = rng(44);
        const double eps = 0.37;
        const int n = 100000;
        double sum = 0, sum2 = 0;
        for (int i = 0; i < n; ++i) {
            const double beta = uniform(g, 0, kTwoPi);
            const double e = 1.0 - direct_tilted_fidelity(beta, eps);
            sum += e;
            sum2 += e * e;
        }
        const double mean = sum / n;
        const double var = (sum2 - n * mean * mean) / (n - 1);
        const double stderr_ = std::sqrt(var / n);
        CHECK(std::abs(mean - average_tilt_error(eps)) < 3 * stderr_);
    }
}

TEST_CASE("threshold kappa") {
    CHECK(std::abs(threshold_kappa(1e-4) - 70.7054) < 5e-4);
    CHECK(threshold_kappa(1.0 - std::cos(kPi / 4)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(threshold_kappa(0.999) < 0.05);  // error budget near 1 needs almost no splitting
    CHECK_THROWS_AS(threshold_kappa(0.0), NumericDomainError);
    CHECK_THROWS_AS(threshold_kappa(1.0), NumericDomainError);
}

TEST_CASE("standard_sequence_error reproduces the reference errors") {
    struct Case {
        const char* gate;
        double kappa;
        double e0_percent;
    };
    const Case cases[] = {
        {"T", 1, 4.2893}, {"S", 10, 0.2481}, {"Ky", 1, 29.2893}, {"Ky", 100, 0.0050},
    };
    for (const Case& c : cases) {
        const Mat2 gate = *gates::gate_by_name(c.gate);
        const ErrorReport r = standard_sequence_error(standard_sequence(gate), c.kappa, gate);
        CHECK(std::abs(r.error - c.e0_percent / 100.0) < 2e-4);
        CHECK(r.error == 1.0 - r.fidelity);
    }
}

TEST_CASE("standard error is non-increasing in kappa") {
    const double grid[] = {1, 5, 10, 50, 100};
    for (const char* name : {"T", "S", "Had", "Ky", "U1_2", "U2_2"}) {
        const Mat2 gate = *gates::gate_by_name(name);
        const transfer::EulerSequence seq = standard_sequence(gate);
        double prev = 1.0;
        for (double kappa : grid) {
            const double e = standard_sequence_error(seq, kappa, gate).error;
            CHECK(e <= prev + 1e-12);
            prev = e;
        }
    }
}

TEST_CASE("x-only sequences are exact on tilted hardware") {
    const Mat2 x = *gates::gate_by_name("X");
    const ErrorReport r = standard_sequence_error(standard_sequence(x), 1.0, x);
    CHECK(r.error < 1e-12);
}
