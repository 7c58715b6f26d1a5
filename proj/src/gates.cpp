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

#include "rotkit/gates.hpp"

#include <cmath>
#include <map>

namespace rotkit::gates {

namespace {

Mat2 ux(double a) { return gate_from_generator(a / 2, Vec3::UnitX()); }
Mat2 uz(double a) { return gate_from_generator(a / 2, Vec3::UnitZ()); }

// The second-qubit CNOT local factors.  The adjoints of the textbook
// products U_x(pi/2) U_z(3pi/2) U_x(3pi/2) and U_z(3pi/2) U_x(pi/2) are the
// versions that assemble with the Ising flows into an exact CNOT (and whose
// two-axis decompositions the reference table lists); the plain products do
// neither.
Mat2 u1_2() { return Mat2((ux(0.5 * kPi) * uz(1.5 * kPi) * ux(1.5 * kPi)).adjoint()); }
Mat2 u2_2() { return Mat2((uz(1.5 * kPi) * ux(0.5 * kPi)).adjoint()); }

const std::map<std::string, Mat2>& registry() {
    static const std::map<std::string, Mat2> reg = [] {
        std::map<std::string, Mat2> m;
        m.emplace("I", Mat2::Identity());
        m.emplace("X", ux(kPi));
        m.emplace("Z", uz(kPi));
        m.emplace("T", gate_from_generator(kPi / 8, Vec3::UnitZ()));
        m.emplace("S", gate_from_generator(kPi / 4, Vec3::UnitZ()));
        m.emplace("Had", gate_from_generator(kPi / 2, Vec3(1, 0, 1)));
        m.emplace("Kx", ux(kPi));
        m.emplace("Ky", Mat2(ux(kPi) * uz(kPi)));
        m.emplace("U1_1", uz(1.75 * kPi));
        m.emplace("U2_1", uz(1.75 * kPi));
        m.emplace("U1_2", u1_2());
        m.emplace("U2_2", u2_2());
        return m;
    }();
    return reg;
}

}  // namespace

Mat2 gate_from_generator(double phi, const Vec3& n) {
    const Vec3 u = n.normalized();
    return std::cos(phi) * Mat2::Identity() +
           Cplx(0, 1) * std::sin(phi) *
               (u.x() * pauli_x() + u.y() * pauli_y() + u.z() * pauli_z());
}

TargetGate TargetGate::from_unitary(const Mat2& u) {
    if (!is_special_unitary(u, 1e-9)) {
        throw NumericDomainError("matrix is not special unitary");
    }
    return TargetGate(u);
}

TargetGate TargetGate::from_generator(double phi, const Vec3& n) {
    return TargetGate(gate_from_generator(phi, n));
}

TargetGate TargetGate::from_rotation(const Mat3& r) {
    if (!is_rotation(r, 1e-9)) throw NumericDomainError("matrix is not a rotation");
    const AxisAngle aa = axis_angle(r);
    GeneratorVector g{0.5 * aa.angle * aa.axis};
    return TargetGate(su2_exp(g, 1.0));
}

Mat3 TargetGate::so3() const { return so3_from_su2(u_); }

std::optional<Mat2> gate_by_name(const std::string& name) {
    const auto& reg = registry();
    const auto it = reg.find(name);
    if (it == reg.end()) return std::nullopt;
    return it->second;
}

const std::vector<std::string>& gate_names() {
    static const std::vector<std::string> names = {"I",  "X",    "Z",    "T",    "S",    "Had",
                                                   "Kx", "Ky",   "U1_1", "U2_1", "U1_2", "U2_2"};
    return names;
}

}  // namespace rotkit::gates
