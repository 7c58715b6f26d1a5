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

#include <vector>

#include "rotkit/core.hpp"

// Steering of a point on the unit sphere onto another using only rotations
// about the two fixed frame axes h and g: the pi-rotation ladder, the
// two-step PR moves, and the closed-form minimal step counts.
namespace rotkit::transfer {

enum class Axis { H, G };

struct Step {
    double angle = 0.0;  // radians, normalized to [0, 2*pi) on output
    Axis axis = Axis::H;
};

// Rotation steps listed in application order: the first element acts first.
struct EulerSequence {
    std::vector<Step> steps;

    std::size_t size() const { return steps.size(); }
    bool empty() const { return steps.empty(); }
};

// Merge adjacent same-axis steps, drop steps within 1e-12 of a full turn or
// of zero, wrap everything into [0, 2*pi).  Never changes the realized
// rotation.
EulerSequence simplified(const EulerSequence& seq);

// Exact inverse: reversed order, negated angles.
EulerSequence inverted(const EulerSequence& seq);

// Two-step move angles between theta-circles; `about_g` is applied about g,
// `about_h` about h.  pr1 applies g first, pr2 applies h first.
struct PrAngles {
    double about_g = 0.0;
    double about_h = 0.0;
};

// cos(phi) = [sin t0 - cot z (cos tf - cos t0)] / sin tf
// cos(theta) = [-cos z cos(z - t0) + cos tf] / [sin z sin(z - t0)]
// Returned with theta = +arccos, phi = -arccos; the sequence
// R_h(phi) . R_g(theta) maps (t0, 0) onto (tf, 0).
PrAngles pr1(double theta0, double thetaf, double zeta);

// cos(phi) = [sin tf - cot z (cos t0 - cos tf)] / sin t0
// cos(theta) = [-cos z cos(z - tf) + cos t0] / [sin z sin(z - tf)]
// Returned with phi = -arccos, theta = -arccos; the sequence
// R_g(theta) . R_h(phi) maps (t0, 0) onto (tf, 0).  With thetaf = 0 the
// angles coincide with the ladder tail used by the gate decomposition.
PrAngles pr2(double theta0, double thetaf, double zeta);

struct TransferProblem {
    PolarCoords start;
    PolarCoords goal;
    AxisFrame frame;
};

// Sequence of rotations about h and g steering start to goal.  Descending
// problems use the h-first template: kill the start azimuth, walk the
// pi-ladder down by 2*zeta per pair, finish with a PR move and the goal
// azimuth.  Ascending problems are solved swapped and inverted; obtuse
// frames (zeta > pi/2) are reduced through the reflected frame (g -> -g,
// g-angles negated on the way back).  In the rare corner where the h-first
// template would exceed the Lowenthal bound, an equivalent g-first sequence
// (one g-rotation onto the x-z plane, then the same machinery) is emitted
// instead.
EulerSequence transfer_sequence(const TransferProblem& problem);

// Apply the sequence to a vector (application order).
Vec3 apply_sequence(const EulerSequence& seq, const Vec3& v, const AxisFrame& frame);

// Closed-form minimal step counts for a descending problem (theta0 >=
// thetaf; callers pre-normalize).  Obtuse frames are reduced via the
// reflection, which preserves counts.
int min_steps_h_first(const TransferProblem& problem);
int min_steps_g_first(const TransferProblem& problem);

}  // namespace rotkit::transfer
