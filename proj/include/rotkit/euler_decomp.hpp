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

#include "rotkit/core.hpp"
#include "rotkit/state_transfer.hpp"

// Generalized Euler angles: decompose any SO(3) rotation (or SU(2) gate
// through the double cover) into rotations about two fixed, generally
// non-orthogonal axes, plus the standard orthogonal-axis decomposition and
// the Lowenthal step bound.
namespace rotkit::decomp {

using transfer::Axis;
using transfer::EulerSequence;
using transfer::Step;

struct DecompositionResult {
    // Simplified output sequence (zero steps dropped, same-axis runs merged).
    EulerSequence sequence;
    // Raw assembly before simplification: 3 steps for p = 0, else 2p + 3,
    // axes alternating H, G, H, ...  (plus one leading G step on the
    // antipodal route).
    EulerSequence assembled;
    int ladder_count = 0;  // p
    bool antipodal_route = false;
    bool reflected_frame = false;  // zeta > pi/2 handled via g -> -g
    Mat3 reconstructed = Mat3::Identity();
    double residual = 0.0;  // Frobenius distance to the input rotation
};

// Decompose r into rotations about frame.h and frame.g:
//   (theta_af, phi_af) = polar(r h); p = largest integer < theta_af/(2 zeta);
//   eps1/eps2 from the two-step move onto the pole; eps3 = phi_af;
//   eps0 from the image of the second fiducial point under the inverse
//   steering.  Application order starts with the eps0 rotation about h.
// Frames with zeta > pi/2 are reduced through the reflected frame; when the
// plain assembly would exceed the Lowenthal bound (theta_af near pi with
// frac(pi/(2 zeta)) < 1/2), the rotation is decomposed through its
// composition with R_g(pi) instead, which saves a ladder pair.
DecompositionResult generalized_euler_angles(const Mat3& r, const AxisFrame& frame);

// Matrix product of the sequence's rotations, application order.
Mat3 reconstruct(const EulerSequence& seq, const AxisFrame& frame);

// SU(2) lift: product of exp(-i angle/2 axis.sigma) factors in application
// order; its adjoint image equals reconstruct().
Mat2 reconstruct_su2(const EulerSequence& seq, const AxisFrame& frame);

// Standard orthogonal-axis decomposition of w into steps about x (tag H) and
// z (tag G): w = U_z(beta+gamma-pi/2) U_x(2 alpha) U_z(beta-gamma+pi/2) with
// U(a) = exp(+i a/2 sigma) and (alpha, beta, gamma) the su2_params of w.
// Steps are emitted in the library's exp(-i/2) convention and simplified, so
// pure z-gates come out as a single G step.
EulerSequence standard_euler_angles(const Mat2& w);

// K = ceil(pi / zeta) + 1, the maximum number of two-axis steps needed for
// any rotation.  Obtuse zeta folds to pi - zeta (axes are lines).
int lowenthal_bound(double zeta);
int lowenthal_bound_kappa(double kappa);

}  // namespace rotkit::decomp
