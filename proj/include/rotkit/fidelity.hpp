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

#include <string>

#include "rotkit/core.hpp"
#include "rotkit/state_transfer.hpp"

// Gate errors under the tilted-axis execution model: the controllable axis
// is H(kappa) = (x + kappa z)/sqrt(1 + kappa^2) instead of z, so every
// z-step of a standard sequence rotates about a tilted axis.
namespace rotkit::fidelity {

using transfer::EulerSequence;

// kappa <-> zeta <-> epsilon chain:
//   cos(zeta) = 1/sqrt(1+kappa^2), zeta = (1 - epsilon) pi/2.
struct TiltModel {
    double kappa = 0.0;
    double zeta = 0.0;
    double epsilon = 0.0;

    static TiltModel from_kappa(double kappa);
    static TiltModel from_zeta(double zeta);
    static TiltModel from_epsilon(double epsilon);
};

struct ErrorReport {
    double fidelity = 1.0;
    double error = 0.0;  // 1 - fidelity
    std::string model;   // "ideal" | "tilted(kappa)" | "truncated(digits)"
};

// |Tr(u^dag v)| / dim; invariant under global phase and SU(2) sign.
double gate_fidelity(const Mat2& u, const Mat2& v);
double gate_fidelity(const Mat4& u, const Mat4& v);

// Closed form for a z-rotation by beta executed about the tilted axis:
// cos^2(beta/2) [1 - cos(eps pi/2)] + |cos(eps pi/2)|.
double tilted_z_fidelity(double beta, double epsilon);

// Average over beta of the tilted z-rotation error: [1 - cos(eps pi/2)]/2.
double average_tilt_error(double epsilon);

// Smallest kappa keeping the worst-case single-step error at or below
// max_error: kappa = s/sqrt(1-s^2) with s = 1 - max_error.
double threshold_kappa(double max_error);

// Execute a sequence over ideal axes {x (H), z (G)} with the G steps rotated
// about the H(kappa) axis instead; exp(-i/2) step convention.
Mat2 execute_tilted(const EulerSequence& seq, double kappa);

// Error of the executed sequence against the target: 1 - |Tr|/2.
ErrorReport standard_sequence_error(const EulerSequence& seq, double kappa, const Mat2& target);

}  // namespace rotkit::fidelity
