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

#include "rotkit/state_transfer.hpp"

#include <cmath>

namespace rotkit::transfer {

namespace {

constexpr double kTol = 1e-12;

// Lowenthal bound on the number of two-axis steps; axes are lines, so the
// effective angle is min(zeta, pi - zeta).
int step_bound(double zeta) {
    const double ze = std::min(zeta, kPi - zeta);
    return static_cast<int>(std::ceil(kPi / ze - kTol)) + 1;
}

// Signed rotation angle about `axis` taking `from` onto `to`, both assumed
// to lie on the same cone around the axis.
double turn_about(const Vec3& axis, const Vec3& from, const Vec3& to) {
    const Vec3 va = from - from.dot(axis) * axis;
    const Vec3 vb = to - to.dot(axis) * axis;
    if (va.norm() < kTol || vb.norm() < kTol) return 0.0;
    return std::atan2(axis.dot(va.cross(vb)), va.dot(vb));
}

void push(std::vector<Step>& steps, double angle, Axis axis) {
    steps.push_back({angle, axis});
}

// h-first template for a descending problem with zeta <= pi/2, theta0 >
// thetaf: azimuth kill, p ladder pairs, PR move, final azimuth.
EulerSequence h_first(double t0, double p0, double tf, double pf, double zeta) {
    std::vector<Step> steps;
    push(steps, -p0, Axis::H);
    const int p = static_cast<int>(std::floor((t0 - tf) / (2 * zeta) + kTol));
    const double tb = t0 - 2.0 * zeta * p;
    for (int i = 0; i < p; ++i) {
        push(steps, kPi, Axis::G);
        push(steps, kPi, Axis::H);
    }
    if (std::abs(tb - tf) > kTol) {
        if (tb <= zeta + kTol || (2 * zeta - tb >= -kTol && 2 * zeta - tb > tf)) {
            const PrAngles a = pr2(tb, tf, zeta);
            push(steps, a.about_h, Axis::H);
            push(steps, a.about_g, Axis::G);
        } else {
            const PrAngles a = pr1(tb, tf, zeta);
            push(steps, a.about_g, Axis::G);
            push(steps, a.about_h, Axis::H);
        }
    }
    push(steps, pf, Axis::H);
    return simplified({steps});
}

// g-first variant: one rotation about g onto the x-z plane (or straight onto
// the goal circle when reachable), then the h-first machinery.
EulerSequence g_first(double t0, double p0, double tf, double pf, const AxisFrame& f) {
    const double zeta = f.zeta;
    const Vec3 start = polar_to_vector({t0, p0}, f);
    const double c = std::acos(clamp_unit(std::cos(zeta) * std::cos(t0) +
                                          std::sin(zeta) * std::sin(t0) * std::cos(p0)));
    const double lo = std::abs(c - zeta);
    const double hi = kPi - std::abs(kPi - (c + zeta));
    if (c > kTol && lo - kTol <= tf && tf <= hi + kTol) {
        // One g-step onto the goal's h-circle, one h-step to the goal.
        Vec3 e1 = f.h - std::cos(zeta) * f.g;
        e1.normalize();
        const Vec3 e2 = f.g.cross(e1);
        const double c2 = std::sin(c) * e1.dot(f.h);
        if (std::abs(c2) > kTol) {
            const double cs = (std::cos(tf) - std::cos(c) * std::cos(zeta)) / c2;
            if (std::abs(cs) <= 1 + 1e-9) {
                const double s = std::acos(clamp_unit(cs));
                const Vec3 x = std::cos(c) * f.g + std::sin(c) * (std::cos(s) * e1 + std::sin(s) * e2);
                std::vector<Step> steps;
                push(steps, turn_about(f.g, start, x), Axis::G);
                push(steps, pf - polar(x, f).phi, Axis::H);
                return simplified({steps});
            }
        }
    }
    const double tp = std::abs(c - zeta);
    const double azimuth = c >= zeta ? kPi : 0.0;
    const Vec3 target = polar_to_vector({tp, azimuth}, f);
    std::vector<Step> steps;
    push(steps, turn_about(f.g, start, target), Axis::G);
    const EulerSequence rest = h_first(tp, azimuth, tf, pf, zeta);
    steps.insert(steps.end(), rest.steps.begin(), rest.steps.end());
    return simplified({steps});
}

struct CountTerms {
    int p = 0;
    double tb = 0.0;
};

CountTerms ladder_terms(double t0, double tf, double zeta) {
    CountTerms c;
    c.p = static_cast<int>(std::floor((t0 - tf) / (2 * zeta) + kTol));
    c.tb = t0 - 2.0 * zeta * c.p;
    return c;
}

// Whether the goal is reachable from the in-plane point (tb, 0) by a single
// g-rotation.  q > 0 is the under-reach test; the second clause guards the
// antipodal wrap of the circle.
int final_move_cost(double tb, double tf, double pf, double zeta) {
    const double q = std::cos(tf) -
                     (std::tan(zeta) * (std::sin(tb) - std::sin(tf) * std::cos(pf)) + std::cos(tb));
    const double goal_g =
        std::acos(clamp_unit(std::cos(zeta) * std::cos(tf) + std::sin(zeta) * std::sin(tf) * std::cos(pf)));
    const double upper = kPi - std::abs(kPi - (tb + zeta));
    return (q > kTol || goal_g > upper + kTol) ? 1 : 0;
}

// Reduce to a descending, acute-frame problem.  Returns false when the
// counts should be computed on the reflected problem instead.
TransferProblem reflect_problem(const TransferProblem& problem) {
    TransferProblem r;
    r.frame = problem.frame.reflected();
    r.start = polar(polar_to_vector(problem.start, problem.frame), r.frame);
    r.goal = polar(polar_to_vector(problem.goal, problem.frame), r.frame);
    return r;
}

}  // namespace

EulerSequence simplified(const EulerSequence& seq) {
    std::vector<Step> st;
    st.reserve(seq.steps.size());
    for (const Step& s : seq.steps) st.push_back({wrap_angle(s.angle), s.axis});
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Step> out;
        for (const Step& s : st) {
            const bool zero = s.angle < kTol || kTwoPi - s.angle < kTol;
            if (zero) {
                changed = true;
                continue;
            }
            if (!out.empty() && out.back().axis == s.axis) {
                out.back().angle = wrap_angle(out.back().angle + s.angle);
                changed = true;
            } else {
                out.push_back(s);
            }
        }
        st = std::move(out);
    }
    return {st};
}

EulerSequence inverted(const EulerSequence& seq) {
    EulerSequence out;
    out.steps.reserve(seq.size());
    for (auto it = seq.steps.rbegin(); it != seq.steps.rend(); ++it) {
        out.steps.push_back({wrap_angle(-it->angle), it->axis});
    }
    return out;
}

PrAngles pr1(double theta0, double thetaf, double zeta) {
    const double sz = std::sin(zeta), cz = std::cos(zeta);
    const double cosphi = (sz * std::sin(theta0) - cz * (std::cos(thetaf) - std::cos(theta0))) /
                          (sz * std::sin(thetaf));
    const double costh =
        (-cz * std::cos(zeta - theta0) + std::cos(thetaf)) / (sz * std::sin(zeta - theta0));
    return {std::acos(clamp_unit(costh)), -std::acos(clamp_unit(cosphi))};
}

PrAngles pr2(double theta0, double thetaf, double zeta) {
    const double sz = std::sin(zeta), cz = std::cos(zeta);
    const double cosphi = (sz * std::sin(thetaf) - cz * (std::cos(theta0) - std::cos(thetaf))) /
                          (sz * std::sin(theta0));
    const double costh =
        (-cz * std::cos(zeta - thetaf) + std::cos(theta0)) / (sz * std::sin(zeta - thetaf));
    return {-std::acos(clamp_unit(costh)), -std::acos(clamp_unit(cosphi))};
}

EulerSequence transfer_sequence(const TransferProblem& problem) {
    const double zeta = problem.frame.zeta;
    if (zeta > kPi / 2 + kTol) {
        const EulerSequence steps = transfer_sequence(reflect_problem(problem));
        EulerSequence out;
        out.steps.reserve(steps.size());
        for (const Step& s : steps.steps) {
            out.steps.push_back({s.axis == Axis::G ? wrap_angle(-s.angle) : s.angle, s.axis});
        }
        return simplified(out);
    }
    const double t0 = problem.start.theta, p0 = problem.start.phi;
    const double tf = problem.goal.theta, pf = problem.goal.phi;
    if (std::abs(t0 - tf) <= kTol) {
        const double d = wrap_angle(pf - p0);
        if (d <= kTol || kTwoPi - d <= kTol) return {};
        return {{{d, Axis::H}}};
    }
    if (t0 < tf) {
        TransferProblem swapped = problem;
        std::swap(swapped.start, swapped.goal);
        return simplified(inverted(transfer_sequence(swapped)));
    }
    EulerSequence seq = h_first(t0, p0, tf, pf, zeta);
    const int bound = step_bound(zeta);
    if (static_cast<int>(seq.size()) > bound) {
        EulerSequence alt = g_first(t0, p0, tf, pf, problem.frame);
        if (alt.size() < seq.size()) seq = std::move(alt);
    }
    return seq;
}

Vec3 apply_sequence(const EulerSequence& seq, const Vec3& v, const AxisFrame& frame) {
    Vec3 out = v;
    for (const Step& s : seq.steps) {
        out = rotation_about_axis(frame.axis(s.axis == Axis::G), s.angle) * out;
    }
    return out;
}

int min_steps_h_first(const TransferProblem& problem) {
    if (problem.frame.zeta > kPi / 2 + kTol) return min_steps_h_first(reflect_problem(problem));
    const double t0 = problem.start.theta, tf = problem.goal.theta, pf = problem.goal.phi;
    const double zeta = problem.frame.zeta;
    const CountTerms c = ladder_terms(t0, tf, zeta);
    return 2 * c.p + 2 + final_move_cost(c.tb, tf, pf, zeta);
}

int min_steps_g_first(const TransferProblem& problem) {
    if (problem.frame.zeta > kPi / 2 + kTol) return min_steps_g_first(reflect_problem(problem));
    const double t0 = problem.start.theta, p0 = problem.start.phi;
    const double tf = problem.goal.theta, pf = problem.goal.phi;
    const double zeta = problem.frame.zeta;
    const double cg = std::acos(
        clamp_unit(std::cos(zeta) * std::cos(t0) + std::sin(zeta) * std::sin(t0) * std::cos(p0)));
    const double tp = std::abs(cg - zeta);
    if (tp - tf <= kTol) return 2;
    const CountTerms c = ladder_terms(tp, tf, zeta);
    return 2 + 2 * c.p + 1 + final_move_cost(c.tb, tf, pf, zeta);
}

}  // namespace rotkit::transfer
