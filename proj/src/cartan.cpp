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

#include "rotkit/cartan.hpp"

#include <cmath>

#include "rotkit/euler_decomp.hpp"
#include "rotkit/gates.hpp"

namespace rotkit::cartan {

namespace {

Mat2 named(const char* name) { return *gates::gate_by_name(name); }

// Orthogonal-frame decomposition of a local gate; these are the sequences a
// standard-angle controller would play back.
transfer::EulerSequence standard_sequence(const Mat2& gate) {
    static const AxisFrame ortho = AxisFrame::from_kappa(std::numeric_limits<double>::infinity());
    return decomp::generalized_euler_angles(so3_from_su2(gate), ortho).sequence;
}

Mat2 realize(const Mat2& gate, Execution mode, double kappa) {
    switch (mode) {
        case Execution::Ideal:
            return gate;
        case Execution::TiltedStandard:
            return fidelity::execute_tilted(standard_sequence(gate), kappa);
        case Execution::TiltedOptimized: {
            const AxisFrame frame = AxisFrame::from_kappa(kappa);
            return decomp::reconstruct_su2(
                decomp::generalized_euler_angles(so3_from_su2(gate), frame).sequence, frame);
        }
    }
    return gate;
}

}  // namespace

Mat4 ising_flow(double alpha) {
    Mat4 z = Mat4::Zero();
    const Cplx em = std::exp(Cplx(0, -alpha));
    const Cplx ep = std::exp(Cplx(0, alpha));
    z(0, 0) = em;
    z(1, 1) = ep;
    z(2, 2) = ep;
    z(3, 3) = em;
    return z;
}

Mat4 kron(const Mat2& a, const Mat2& b) {
    Mat4 out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        }
    }
    return out;
}

const Mat4& cnot_matrix() {
    static const Mat4 m = [] {
        Mat4 c = Mat4::Zero();
        c(0, 0) = 1;
        c(1, 1) = 1;
        c(2, 3) = 1;
        c(3, 2) = 1;
        return c;
    }();
    return m;
}

Mat4 assemble(const CartanSpec& s) {
    const Mat4 u1 = kron(s.u1_1, s.u1_2);
    const Mat4 u2 = kron(s.u2_1, s.u2_2);
    const Mat4 kx = kron(s.kx_1, s.kx_2);
    const Mat4 ky = kron(s.ky_1, s.ky_2);
    return u1 * kx.adjoint() * ising_flow(s.alphas[0]) * kx * ky.adjoint() *
           ising_flow(s.alphas[1]) * ky * ising_flow(s.alphas[2]) * u2;
}

CartanSpec cnot_spec(Execution mode, double kappa) {
    CartanSpec s;
    s.alphas = {kPi / 8, kPi / 8, 0.0};
    s.u1_1 = realize(named("U1_1"), mode, kappa);
    s.u1_2 = realize(named("U1_2"), mode, kappa);
    s.u2_1 = realize(named("U2_1"), mode, kappa);
    s.u2_2 = realize(named("U2_2"), mode, kappa);
    s.kx_1 = realize(named("Kx"), mode, kappa);
    s.kx_2 = s.kx_1;
    s.ky_1 = realize(named("Ky"), mode, kappa);
    s.ky_2 = s.ky_1;
    return s;
}

fidelity::ErrorReport cnot_error(double kappa, Angles mode) {
    const Execution exec =
        mode == Angles::Standard ? Execution::TiltedStandard : Execution::TiltedOptimized;
    fidelity::ErrorReport r;
    r.fidelity = fidelity::gate_fidelity(cnot_matrix(), assemble(cnot_spec(exec, kappa)));
    r.error = 1.0 - r.fidelity;
    r.model = (mode == Angles::Standard ? "tilted-standard(" : "tilted-optimized(") +
              std::to_string(kappa) + ")";
    return r;
}

}  // namespace rotkit::cartan
