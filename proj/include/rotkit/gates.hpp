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

#include <optional>
#include <string>
#include <vector>

#include "rotkit/core.hpp"

// Named single-qubit gates and target-gate forms.
namespace rotkit::gates {

// exp(+i phi n.sigma); n is normalized.
Mat2 gate_from_generator(double phi, const Vec3& n);

// A target gate given as an SU(2) matrix, a generator pair (phi, n), or an
// SO(3) rotation (forms interconvert; the SU(2) lift of a rotation is fixed
// up to sign, which no fidelity metric here can see).
class TargetGate {
  public:
    static TargetGate from_unitary(const Mat2& u);
    static TargetGate from_generator(double phi, const Vec3& n);
    static TargetGate from_rotation(const Mat3& r);

    const Mat2& su2() const { return u_; }
    Mat3 so3() const;

  private:
    explicit TargetGate(Mat2 u) : u_(std::move(u)) {}
    Mat2 u_;
};

// Registry of named gates:
//   I, X, Z    - identity and the pi pulses exp(+i pi/2 sigma)
//   T, S       - exp(i pi/8 sigma_z), exp(i pi/4 sigma_z)
//   Had        - exp(i pi/(2 sqrt 2) (sigma_x + sigma_z))
//   Kx, Ky     - the CNOT conjugation pulses U_x(pi), U_x(pi) U_z(pi)
//   U1_1, U2_1 - U_z(1.75 pi)
//   U1_2, U2_2 - the second-qubit CNOT local factors
// All built with the exp(+i a/2 sigma) pulse convention.
std::optional<Mat2> gate_by_name(const std::string& name);

// Names accepted by gate_by_name, in presentation order.
const std::vector<std::string>& gate_names();

}  // namespace rotkit::gates
