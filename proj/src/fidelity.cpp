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

#include "rotkit/fidelity.hpp"

#include <cmath>
#include <limits>

namespace rotkit::fidelity {

TiltModel TiltModel::from_kappa(double kappa) {
    if (!(kappa > 0) && !std::isinf(kappa)) throw NumericDomainError("kappa must be positive");
    TiltModel m;
    m.kappa = kappa;
    // pi/2 - zeta = atan(1/kappa); the direct form keeps epsilon accurate
    // for nearly orthogonal axes where 1 - 2 zeta/pi would cancel.
    m.epsilon = std::isinf(kappa) ? 0.0 : 2.0 * std::atan(1.0 / kappa) / kPi;
    m.zeta = (1.0 - m.epsilon) * kPi / 2;
    return m;
}

TiltModel TiltModel::from_zeta(double zeta) {
    if (!(zeta > 0) || !(zeta <= kPi / 2)) throw NumericDomainError("zeta must lie in (0, pi/2]");
    TiltModel m;
    m.zeta = zeta;
    m.epsilon = (kPi - 2.0 * zeta) / kPi;
    m.kappa = zeta == kPi / 2 ? std::numeric_limits<double>::infinity() : std::tan(zeta);
    return m;
}

TiltModel TiltModel::from_epsilon(double epsilon) {
    if (!(epsilon >= 0) || !(epsilon < 1)) throw NumericDomainError("epsilon must lie in [0, 1)");
    TiltModel m;
    m.epsilon = epsilon;
    m.zeta = (1.0 - epsilon) * kPi / 2;
    m.kappa = epsilon == 0.0 ? std::numeric_limits<double>::infinity()
                             : 1.0 / std::tan(epsilon * kPi / 2);
    return m;
}

double gate_fidelity(const Mat2& u, const Mat2& v) {
    return std::min(1.0, std::abs((u.adjoint() * v).trace()) / 2.0);
}

double gate_fidelity(const Mat4& u, const Mat4& v) {
    return std::min(1.0, std::abs((u.adjoint() * v).trace()) / 4.0);
}

double tilted_z_fidelity(double beta, double epsilon) {
    const double c = std::cos(epsilon * kPi / 2);
    const double ch = std::cos(beta / 2);
    return ch * ch * (1.0 - c) + std::abs(c);
}

double average_tilt_error(double epsilon) {
    return 0.5 * (1.0 - std::cos(epsilon * kPi / 2));
}

double threshold_kappa(double max_error) {
    if (!(max_error > 0) || !(max_error < 1)) {
        throw NumericDomainError("max_error must lie strictly inside (0, 1)");
    }
    const double s = 1.0 - max_error;
    return s / std::sqrt(1.0 - s * s);
}

Mat2 execute_tilted(const EulerSequence& seq, double kappa) {
    const Vec3 x = Vec3::UnitX();
    const Vec3 tilted = std::isinf(kappa)
                            ? Vec3(Vec3::UnitZ())
                            : Vec3(Vec3(1, 0, kappa) / std::sqrt(1.0 + kappa * kappa));
    Mat2 m = Mat2::Identity();
    for (const transfer::Step& s : seq.steps) {
        const Vec3& u = s.axis == transfer::Axis::G ? tilted : x;
        m = su2_exp({0.5 * s.angle * u}, 1.0) * m;
    }
    return m;
}

ErrorReport standard_sequence_error(const EulerSequence& seq, double kappa, const Mat2& target) {
    ErrorReport r;
    r.fidelity = gate_fidelity(target, execute_tilted(seq, kappa));
    r.error = 1.0 - r.fidelity;
    r.model = std::isinf(kappa) ? "ideal" : "tilted(" + std::to_string(kappa) + ")";
    return r;
}

}  // namespace rotkit::fidelity
