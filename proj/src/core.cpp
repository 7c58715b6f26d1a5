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

#include "rotkit/core.hpp"

#include <cmath>

namespace rotkit {

namespace {
constexpr Cplx kI{0.0, 1.0};
constexpr double kClampTol = 1e-9;
constexpr double kPoleTol = 1e-12;
}  // namespace

const Mat2& pauli_x() {
    static const Mat2 m = (Mat2() << 0, 1, 1, 0).finished();
    return m;
}
const Mat2& pauli_y() {
    static const Mat2 m = (Mat2() << 0, -kI, kI, 0).finished();
    return m;
}
const Mat2& pauli_z() {
    static const Mat2 m = (Mat2() << 1, 0, 0, -1).finished();
    return m;
}

double clamp_unit(double x) {
    if (x > 1.0 + kClampTol || x < -1.0 - kClampTol) {
        throw NumericDomainError("inverse-trig argument out of range: " + std::to_string(x));
    }
    return std::min(1.0, std::max(-1.0, x));
}

double wrap_angle(double a) {
    double m = std::fmod(a, kTwoPi);
    if (m < 0) m += kTwoPi;
    if (kTwoPi - m < 1e-15) m = 0.0;
    return m;
}

bool is_special_unitary(const Mat2& u, double tol) {
    return (u.adjoint() * u - Mat2::Identity()).cwiseAbs().maxCoeff() < tol &&
           std::abs(u.determinant() - 1.0) < tol;
}

bool is_rotation(const Mat3& r, double tol) {
    return (r.transpose() * r - Mat3::Identity()).cwiseAbs().maxCoeff() < tol &&
           std::abs(r.determinant() - 1.0) < tol;
}

bool is_unitary(const Mat4& u, double tol) {
    return (u.adjoint() * u - Mat4::Identity()).cwiseAbs().maxCoeff() < tol;
}

Mat2 su2_from_params(double alpha, double beta, double gamma) {
    const double c = std::cos(alpha), s = std::sin(alpha);
    Mat2 w;
    w << c * std::exp(kI * beta), s * std::exp(kI * gamma),
        -s * std::exp(-kI * gamma), c * std::exp(-kI * beta);
    return w;
}

Su2Params su2_params(const Mat2& w) {
    Su2Params p;
    const double a00 = std::abs(w(0, 0)), a01 = std::abs(w(0, 1));
    p.alpha = std::atan2(a01, a00);
    p.beta = a00 > 1e-14 ? std::arg(w(0, 0)) : 0.0;
    p.gamma = a01 > 1e-14 ? std::arg(w(0, 1)) : 0.0;
    return p;
}

Vec3 GeneratorVector::axis() const {
    const double n = d.norm();
    return n > 0 ? Vec3(d / n) : Vec3::UnitZ();
}

Mat2 su2_exp(const GeneratorVector& d, double t) {
    const double omega = d.omega();
    if (omega == 0.0) return Mat2::Identity();
    const Vec3 n = d.axis();
    const double a = omega * t;
    return std::cos(a) * Mat2::Identity() -
           kI * std::sin(a) * (n.x() * pauli_x() + n.y() * pauli_y() + n.z() * pauli_z());
}

SingleStep single_step_params(const Mat2& w) {
    SingleStep out;
    const double c = clamp_unit(0.5 * (w(0, 0) + w(1, 1)).real());
    out.omega_t = std::acos(c);
    const double s = std::sin(out.omega_t);
    if (std::abs(s) < 1e-12) {
        out.degenerate = true;
        out.axis = Vec3::UnitZ();
        out.omega_t = c > 0 ? 0.0 : kPi;
        return out;
    }
    out.axis = Vec3(-(w(0, 1) + w(1, 0)).imag() / (2 * s),
                    (w(1, 0) - w(0, 1)).real() / (2 * s),
                    -(w(0, 0) - w(1, 1)).imag() / (2 * s));
    out.axis.normalize();
    return out;
}

Mat3 so3_from_su2(const Mat2& u) {
    const Mat2* sig[3] = {&pauli_x(), &pauli_y(), &pauli_z()};
    Mat3 r;
    const Mat2 ud = u.adjoint();
    for (int j = 0; j < 3; ++j) {
        const Mat2 col = u * (*sig[j]) * ud;
        for (int i = 0; i < 3; ++i) {
            r(i, j) = 0.5 * ((*sig[i]) * col).trace().real();
        }
    }
    return r;
}

Mat3 so3_from_generator(const Vec3& n, double phi) {
    // The factor-2 generators double the angle; exp(i phi n.sigma) is a
    // rotation by -2 phi about n under the adjoint convention.
    return rotation_about_axis(n, -2.0 * phi);
}

Mat3 rotation_about_axis(const Vec3& u, double eps) {
    return Eigen::AngleAxisd(eps, u.normalized()).toRotationMatrix();
}

AxisAngle axis_angle(const Mat3& r) {
    Eigen::AngleAxisd aa(r);
    AxisAngle out;
    out.angle = aa.angle();
    out.axis = aa.axis();
    return out;
}

AxisFrame AxisFrame::from_axes(const Vec3& h_in, const Vec3& g_in) {
    AxisFrame f;
    f.h = h_in.normalized();
    f.g = g_in.normalized();
    Vec3 y = f.h.cross(f.g);
    const double ny = y.norm();
    if (ny < 1e-12) throw FrameError("axes are parallel or antiparallel; frame undefined");
    f.y = y / ny;
    f.z = f.h;
    f.x = f.y.cross(f.h);
    f.zeta = std::acos(clamp_unit(f.h.dot(f.g)));
    return f;
}

AxisFrame AxisFrame::from_kappa(double kappa) {
    if (std::isinf(kappa)) return from_axes(Vec3::UnitX(), Vec3::UnitZ());
    if (!(kappa > 0)) throw FrameError("kappa must be positive");
    return from_axes(Vec3::UnitX(), Vec3(1, 0, kappa) / std::sqrt(1 + kappa * kappa));
}

AxisFrame AxisFrame::reflected() const { return from_axes(h, -g); }

PolarCoords polar(const Vec3& a, const AxisFrame& frame) {
    PolarCoords c;
    c.theta = std::acos(clamp_unit(a.dot(frame.z)));
    const double ax = a.dot(frame.x), ay = a.dot(frame.y);
    if (std::hypot(ax, ay) < kPoleTol) {
        c.phi = 0.0;
        return c;
    }
    c.phi = std::atan2(ay, ax);
    if (c.phi < 0) c.phi += kTwoPi;
    return c;
}

Vec3 polar_to_vector(const PolarCoords& c, const AxisFrame& frame) {
    const double st = std::sin(c.theta);
    return st * std::cos(c.phi) * frame.x + st * std::sin(c.phi) * frame.y +
           std::cos(c.theta) * frame.z;
}

Mat2 density_matrix(const BlochState& s) {
    const double st = std::sin(s.theta);
    const Vec3 v(s.r * st * std::cos(s.phi), s.r * st * std::sin(s.phi),
                 s.r * std::cos(s.theta));
    return 0.5 * (Mat2::Identity() + v.x() * pauli_x() + v.y() * pauli_y() + v.z() * pauli_z());
}

BlochState bloch_from_density(const Mat2& rho) {
    const Vec3 v((rho * pauli_x()).trace().real(), (rho * pauli_y()).trace().real(),
                 (rho * pauli_z()).trace().real());
    BlochState s;
    s.r = v.norm();
    if (s.r < kPoleTol) {
        s.theta = 0.0;
        s.phi = 0.0;
        return s;
    }
    s.theta = std::acos(clamp_unit(v.z() / s.r));
    if (std::hypot(v.x(), v.y()) < kPoleTol * s.r) {
        s.phi = 0.0;
    } else {
        s.phi = std::atan2(v.y(), v.x());
        if (s.phi < 0) s.phi += kTwoPi;
    }
    return s;
}

BlochState bloch_roundtrip(const BlochState& s) { return bloch_from_density(density_matrix(s)); }

}  // namespace rotkit
