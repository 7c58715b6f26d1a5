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

#include <array>

#include "rotkit/core.hpp"
#include "rotkit/fidelity.hpp"

// Two-qubit gates assembled from ideal Ising flows and single-qubit factors,
// the CNOT instance, and how single-qubit axis errors propagate into it.
// Tensor factor 1 is the most significant index; the reference CNOT has its
// control on qubit 1.
namespace rotkit::cartan {

// diag exponential exp(-i alpha sigma_z (x) sigma_z).
Mat4 ising_flow(double alpha);

Mat4 kron(const Mat2& a, const Mat2& b);

// Canonical CNOT, control on qubit 1.
const Mat4& cnot_matrix();

// Local factors and Ising flow times for
//   U = U1 . Kx^dag Z(a1) Kx . Ky^dag Z(a2) Ky . Z(a3) . U2
// with Z = ising_flow and all locals as tensor factors.
struct CartanSpec {
    std::array<double, 3> alphas{0, 0, 0};
    Mat2 u1_1 = Mat2::Identity(), u1_2 = Mat2::Identity();
    Mat2 u2_1 = Mat2::Identity(), u2_2 = Mat2::Identity();
    Mat2 kx_1 = Mat2::Identity(), kx_2 = Mat2::Identity();
    Mat2 ky_1 = Mat2::Identity(), ky_2 = Mat2::Identity();
};

Mat4 assemble(const CartanSpec& spec);

enum class Execution {
    Ideal,             // exact local gates
    TiltedStandard,    // each local runs its orthogonal-frame sequence with
                       // z-steps about the H(kappa) axis
    TiltedOptimized,   // each local decomposed over the kappa frame and
                       // reconstructed (exact up to roundoff)
};

// CNOT built from the quarter-turn conjugated Ising flows.  The quoted flow
// quarter-turns are rotation-convention angles, so ising_flow receives
// (pi/8, pi/8, 0); with full-angle flows the conjugated terms would collapse
// to a local gate and no CNOT could result.
CartanSpec cnot_spec(Execution mode, double kappa = std::numeric_limits<double>::infinity());

enum class Angles { Standard, Optimized };

// 1 - |Tr(CNOT^dag . assemble(cnot_spec(...)))| / 4 with ideal Ising terms.
fidelity::ErrorReport cnot_error(double kappa, Angles mode);

}  // namespace rotkit::cartan
