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

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

// Group-theoretic and geometric primitives: SU(2) constructors, the
// SU(2) -> SO(3) adjoint map, axis frames, polar coordinates, axis-angle
// rotations and the Bloch-vector mapping.
//
// Conventions used throughout the library:
//   * A rotation step of angle e about the unit axis u is the adjoint action
//     of exp(-i e/2 u.sigma); equivalently the right-handed Rodrigues
//     rotation.  rotation_about_axis(z, pi/2) maps x to y.
//   * Angles are radians internally.
namespace rotkit {

using Cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4cd;
using Vec3 = Eigen::Vector3d;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Raised when an inverse-trig argument falls outside [-1,1] by more than the
// roundoff allowance (1e-9); smaller excursions are clamped silently.
struct NumericDomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Raised when an axis pair with h = +-g is used to build a frame.
struct FrameError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

const Mat2& pauli_x();
const Mat2& pauli_y();
const Mat2& pauli_z();

// Clamp x into [-1,1]; throws NumericDomainError beyond the 1e-9 allowance.
double clamp_unit(double x);

// Wrap an angle into [0, 2*pi).
double wrap_angle(double a);

bool is_special_unitary(const Mat2& u, double tol = 1e-12);
bool is_rotation(const Mat3& r, double tol = 1e-12);
bool is_unitary(const Mat4& u, double tol = 1e-12);

// W(alpha,beta,gamma) = [[cos(a) e^{ib}, sin(a) e^{ig}],
//                        [-sin(a) e^{-ig}, cos(a) e^{-ib}]]
Mat2 su2_from_params(double alpha, double beta, double gamma);

// Recover (alpha, beta, gamma) with alpha in [0, pi/2]; beta/gamma default to
// 0 where the corresponding entry vanishes.
struct Su2Params {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};
Su2Params su2_params(const Mat2& w);

// A real coefficient vector d for the traceless Hermitian generator
// d.sigma, with magnitude Omega = |d| and unit direction d/Omega.
struct GeneratorVector {
    Vec3 d = Vec3::Zero();

    double omega() const { return d.norm(); }
    Vec3 axis() const;  // unit direction; z for the zero generator
};

// exp(-i t d.sigma) = cos(Omega t) I - i sin(Omega t) n.sigma.
Mat2 su2_exp(const GeneratorVector& d, double t);

// Axis/angle (n, Omega*T) with W = cos(Omega T) I - i sin(Omega T) n.sigma,
// Omega*T in [0, pi].  W = +-I has no defined axis: the result is flagged
// degenerate and carries the fixed axis (0,0,1).
struct SingleStep {
    Vec3 axis = Vec3::UnitZ();
    double omega_t = 0.0;
    bool degenerate = false;
};
SingleStep single_step_params(const Mat2& w);

// Adjoint map: R with U (s.sigma) U^dag = (R s).sigma.  Sign-blind:
// so3_from_su2(U) == so3_from_su2(-U) exactly.
Mat3 so3_from_su2(const Mat2& u);

// exp(Phi (n_x Rx + n_y Ry + n_z Rz)) with the factor-2 generator matrices;
// equal to so3_from_su2(exp(i Phi n.sigma)).
Mat3 so3_from_generator(const Vec3& n, double phi);

// Right-handed rotation by eps about the unit axis u.
Mat3 rotation_about_axis(const Vec3& u, double eps);

// Axis-angle extraction of a rotation matrix, angle in [0, pi].
struct AxisAngle {
    Vec3 axis = Vec3::UnitZ();
    double angle = 0.0;
};
AxisAngle axis_angle(const Mat3& r);

// Two fixed unit rotation axes h, g plus the induced orthonormal frame
// z = h, y = (h x g)/|h x g|, x = y x h, and the inter-axis angle
// zeta = arccos(h.g) in (0, pi).
struct AxisFrame {
    Vec3 h, g;
    Vec3 x, y, z;
    double zeta;

    // Throws FrameError when h = +-g.  Inputs are normalized.
    static AxisFrame from_axes(const Vec3& h, const Vec3& g);
    // h = x, g = (1,0,kappa)/sqrt(1+kappa^2); kappa = inf gives g = z.
    static AxisFrame from_kappa(double kappa);
    // Same h, flipped g: zeta -> pi - zeta.
    AxisFrame reflected() const;

    const Vec3& axis(bool about_g) const { return about_g ? g : h; }
};

struct PolarCoords {
    double theta = 0.0;  // [0, pi]
    double phi = 0.0;    // [0, 2*pi)
};

// Polar coordinates of the unit vector a relative to the frame; phi := 0 at
// the poles (in-plane component below 1e-12).
PolarCoords polar(const Vec3& a, const AxisFrame& frame);

// Inverse embedding: sin(t)cos(p) x + sin(t)sin(p) y + cos(t) z.
Vec3 polar_to_vector(const PolarCoords& c, const AxisFrame& frame);

// Bloch state (r, theta, phi), r in [0,1].  The density matrix is linear in
// r: rho = (I + r s.sigma)/2 with s the unit Bloch direction.  (A quadratic
// r^2 would contradict purity Tr rho^2 = (1+r^2)/2, so the linear form is
// used.)
struct BlochState {
    double r = 1.0;
    double theta = 0.0;
    double phi = 0.0;
};

Mat2 density_matrix(const BlochState& s);
BlochState bloch_from_density(const Mat2& rho);
BlochState bloch_roundtrip(const BlochState& s);

}  // namespace rotkit
