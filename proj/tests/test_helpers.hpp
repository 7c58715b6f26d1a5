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

#include <random>

#include "rotkit/core.hpp"

// Shared generators and independent oracles for the test suites.  Oracles
// deliberately avoid the library's computation paths.
namespace rotkit::testing {

inline std::mt19937_64 rng(uint64_t seed) { return std::mt19937_64{seed}; }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline Vec3 random_unit(std::mt19937_64& g) {
    std::normal_distribution<double> n;
    Vec3 v(n(g), n(g), n(g));
    while (v.norm() < 1e-6) v = Vec3(n(g), n(g), n(g));
    return v.normalized();
}

// Uniform (Haar) random SU(2) via a normalized quaternion.
inline Mat2 random_su2(std::mt19937_64& g) {
    std::normal_distribution<double> n;
    Eigen::Vector4d q(n(g), n(g), n(g), n(g));
    q.normalize();
    return q[0] * Mat2::Identity() -
           Cplx(0, 1) * (q[1] * pauli_x() + q[2] * pauli_y() + q[3] * pauli_z());
}

// Frame with a prescribed inter-axis angle and random orientation.
inline AxisFrame random_frame(std::mt19937_64& g, double zeta) {
    const Vec3 h = random_unit(g);
    Vec3 t = random_unit(g);
    t -= t.dot(h) * h;
    while (t.norm() < 1e-6) {
        t = random_unit(g);
        t -= t.dot(h) * h;
    }
    t.normalize();
    return AxisFrame::from_axes(h, std::cos(zeta) * h + std::sin(zeta) * t);
}

// Truncated-series matrix exponential, the oracle for the closed forms.
template <typename Mat>
Mat expm_series(const Mat& a, int terms = 40) {
    Mat sum = Mat::Identity();
    Mat power = Mat::Identity();
    for (int k = 1; k <= terms; ++k) {
        power = Mat(power * a) / static_cast<double>(k);
        sum += power;
    }
    return sum;
}

// Pauli-basis coefficients of a Hermitian traceless 2x2 matrix read off the
// entries (independent of the trace-formula adjoint map).
inline Vec3 pauli_vector(const Mat2& v) {
    return Vec3(v(0, 1).real(), -v(0, 1).imag(), v(0, 0).real());
}

}  // namespace rotkit::testing
