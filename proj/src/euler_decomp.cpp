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

#include "rotkit/euler_decomp.hpp"

#include <cmath>

namespace rotkit::decomp {

namespace {

constexpr double kTol = 1e-12;

struct RawAssembly {
    std::vector<Step> steps;
    int p = 0;
};

// Core assembly for zeta <= pi/2.
RawAssembly assemble(const Mat3& r, const AxisFrame& f) {
    const double zeta = f.zeta;
    const PolarCoords af = polar(r * f.h, f);
    // guard the ceiling against roundoff at exact integer ratios
    int p = static_cast<int>(std::ceil(af.theta / (2 * zeta) - kTol));
    if (p > 0) --p;
    const double tb = af.theta - 2.0 * zeta * p;

    // Angles of the two-step move from (tb, 0) onto the pole.  The exact
    // ladder boundary tb = 2 zeta and the degenerate tb = 0 are snapped to
    // keep the half-precision loss of arccos near +-1 out of the output.
    double e1, e2;
    if (std::abs(tb - 2 * zeta) < kTol) {
        e2 = 0.0;
        e1 = -kPi;
    } else if (tb > 1e-15) {
        const transfer::PrAngles a = transfer::pr2(tb, 0.0, zeta);
        e2 = a.about_h;
        e1 = a.about_g;
    } else {
        e2 = -kPi / 2;
        e1 = 0.0;
    }
    const double e3 = af.phi;

    Mat3 s1 = rotation_about_axis(f.h, -e3);
    const Mat3 ladder = rotation_about_axis(f.h, kPi) * rotation_about_axis(f.g, kPi);
    for (int i = 0; i < p; ++i) s1 = ladder * s1;
    s1 = rotation_about_axis(f.g, -e1) * rotation_about_axis(f.h, -e2) * s1;

    const Vec3 b0 = rotation_about_axis(f.y, kPi / 2) * f.h;
    const double e0 = polar(s1 * (r * b0), f).phi;

    RawAssembly out;
    out.p = p;
    if (p == 0) {
        out.steps = {{e0, Axis::H}, {e1, Axis::G}, {e2 + e3, Axis::H}};
    } else {
        out.steps = {{e0, Axis::H}, {e1, Axis::G}, {e2 + kPi, Axis::H}};
        for (int i = 0; i < 2 * p - 1; ++i) {
            out.steps.push_back({kPi, i % 2 == 0 ? Axis::G : Axis::H});
        }
        out.steps.push_back({e3, Axis::H});
    }
    for (Step& s : out.steps) s.angle = wrap_angle(s.angle);
    return out;
}

DecompositionResult finish(const Mat3& r, const AxisFrame& f, RawAssembly raw,
                           bool antipodal, bool reflected) {
    DecompositionResult res;
    res.assembled = {std::move(raw.steps)};
    res.ladder_count = raw.p;
    res.antipodal_route = antipodal;
    res.reflected_frame = reflected;
    res.sequence = transfer::simplified(res.assembled);
    res.reconstructed = reconstruct(res.sequence, f);
    res.residual = (res.reconstructed - r).norm();
    return res;
}

}  // namespace

DecompositionResult generalized_euler_angles(const Mat3& r, const AxisFrame& frame) {
    if (frame.zeta > kPi / 2 + kTol) {
        const AxisFrame acute = frame.reflected();
        DecompositionResult inner = generalized_euler_angles(r, acute);
        RawAssembly raw;
        raw.p = inner.ladder_count;
        raw.steps = inner.assembled.steps;
        for (Step& s : raw.steps) {
            if (s.axis == Axis::G) s.angle = wrap_angle(-s.angle);
        }
        return finish(r, frame, std::move(raw), inner.antipodal_route, true);
    }

    RawAssembly raw = assemble(r, frame);
    bool antipodal = false;
    const int bound = lowenthal_bound(frame.zeta);
    if (static_cast<int>(transfer::simplified({raw.steps}).size()) > bound) {
        // Antipodal route: descending to the far pole needs one ladder pair
        // fewer; decompose r . R_g(pi) and prepend the g half-turn.
        RawAssembly alt = assemble(r * rotation_about_axis(frame.g, kPi), frame);
        alt.steps.insert(alt.steps.begin(), {kPi, Axis::G});
        if (static_cast<int>(transfer::simplified({alt.steps}).size()) <= bound) {
            raw = std::move(alt);
            antipodal = true;
        }
    }
    return finish(r, frame, std::move(raw), antipodal, false);
}

Mat3 reconstruct(const EulerSequence& seq, const AxisFrame& frame) {
    Mat3 m = Mat3::Identity();
    for (const Step& s : seq.steps) {
        m = rotation_about_axis(frame.axis(s.axis == Axis::G), s.angle) * m;
    }
    return m;
}

Mat2 reconstruct_su2(const EulerSequence& seq, const AxisFrame& frame) {
    Mat2 m = Mat2::Identity();
    for (const Step& s : seq.steps) {
        const Vec3& u = frame.axis(s.axis == Axis::G);
        GeneratorVector gen{0.5 * s.angle * u};
        m = su2_exp(gen, 1.0) * m;
    }
    return m;
}

EulerSequence standard_euler_angles(const Mat2& w) {
    const Su2Params p = su2_params(w);
    // exp(+i/2) factors expressed in the exp(-i/2) step convention: negate.
    EulerSequence seq{{{wrap_angle(-(p.beta - p.gamma + kPi / 2)), Axis::G},
                       {wrap_angle(-2.0 * p.alpha), Axis::H},
                       {wrap_angle(-(p.beta + p.gamma - kPi / 2)), Axis::G}}};
    return transfer::simplified(seq);
}

int lowenthal_bound(double zeta) {
    const double ze = std::min(zeta, kPi - zeta);
    if (!(ze > 0)) throw NumericDomainError("zeta must lie strictly inside (0, pi)");
    return static_cast<int>(std::ceil(kPi / ze - kTol)) + 1;
}

int lowenthal_bound_kappa(double kappa) {
    if (std::isinf(kappa)) return 3;
    if (!(kappa > 0)) throw NumericDomainError("kappa must be positive");
    return lowenthal_bound(std::acos(1.0 / std::sqrt(1.0 + kappa * kappa)));
}

}  // namespace rotkit::decomp
