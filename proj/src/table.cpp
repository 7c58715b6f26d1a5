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

#include "rotkit/table.hpp"

#include <cmath>
#include <limits>

#include "rotkit/gates.hpp"

namespace rotkit::table {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// +-1 unit in the fourth decimal of an angle printed in units of pi.
constexpr double kAngleTolPi = 1.0001e-4;

double circular_delta_pi(double a, double b) {
    double d = std::fmod(std::abs(a - b), 2.0);
    return std::min(d, 2.0 - d);
}

}  // namespace

const std::vector<ReferenceRow>& reference_rows() {
    static const std::vector<ReferenceRow> rows = {
        {"T", kInf, {0, 1.7500, 0, 0}, 3, 0.0},
        {"T", 100, {0.0013, 1.7500, 0.0013, 0}, 3, 0.0007},
        {"T", 50, {0.0026, 1.7499, 0.0026, 0}, 3, 0.0029},
        {"T", 10, {0.0132, 1.7487, 0.0132, 0}, 3, 0.0727},
        {"T", 5, {0.0264, 1.7448, 0.0264, 0}, 3, 0.2844},
        {"T", 1, {0.1359, 1.6359, 0.1359, 0}, 3, 4.2893},
        {"S", kInf, {0, 1.5000, 0, 0}, 3, 0.0},
        {"S", 100, {0.0032, 1.5000, 0.0032, 0}, 3, 0.0025},
        {"S", 50, {0.0064, 1.4999, 0.0064, 0}, 3, 0.0100},
        {"S", 10, {0.0319, 1.4968, 0.0319, 0}, 3, 0.2481},
        {"S", 5, {0.0641, 1.4873, 0.0641, 0}, 3, 0.9710},
        {"S", 1, {0.5000, 1, 0.5000, 0}, 3, 14.6446},
        {"Had", kInf, {1.5000, 1.5000, 1.5000, 0}, 3, 0.0},
        {"Had", 100, {1.5032, 1.5000, 1.5032, 0}, 3, 0.0025},
        {"Had", 50, {1.5064, 1.4999, 1.5064, 0}, 3, 0.0100},
        {"Had", 10, {1.5319, 1.4968, 1.5319, 0}, 3, 0.2481},
        {"Had", 5, {1.5641, 1.4873, 1.5641, 0}, 3, 0.9709},
        {"Had", 1, {0, 1, 0, 0}, 3, 14.6442},
        {"U1_2", kInf, {0.5000, 1.5000, 1.5000, 0}, 3, 0.0},
        {"U1_2", 100, {0.5032, 1.5000, 1.5032, 0}, 3, 0.0025},
        {"U1_2", 50, {0.5064, 1.4999, 1.5064, 0}, 3, 0.0100},
        {"U1_2", 10, {0.5319, 1.4968, 1.5319, 0}, 3, 0.2481},
        {"U1_2", 5, {0.5641, 1.4873, 1.5641, 0}, 3, 0.9709},
        {"U1_2", 1, {1, 1, 0, 0}, 3, 14.6443},
        {"U2_2", kInf, {0, 1.5000, 0.5000, 0}, 3, 0.0},
        {"U2_2", 100, {0.0032, 1.5000, 0.5032, 0}, 3, 0.0025},
        {"U2_2", 50, {0.0064, 1.4999, 0.5064, 0}, 3, 0.0100},
        {"U2_2", 10, {0.0319, 1.4968, 0.5319, 0}, 3, 0.2481},
        {"U2_2", 5, {0.0641, 1.4873, 0.5641, 0}, 3, 0.9709},
        {"U2_2", 1, {0.5000, 1, 1, 0}, 3, 14.6445},
        {"Ky", kInf, {0, 0, 1, 1}, 4, 0.0},
        {"Ky", 100, {0.5000, 1.9936, 0.5000, 1}, 4, 0.0050},
        {"Ky", 50, {0.5001, 1.9873, 0.5001, 1}, 4, 0.0200},
        {"Ky", 10, {0.5032, 1.9362, 0.5032, 1}, 4, 0.4963},
        {"Ky", 5, {0.5127, 1.8718, 0.5127, 1}, 4, 1.9419},
        {"Ky", 1, {1, 1, 1, 1}, 4, 29.2893},
    };
    return rows;
}

transfer::EulerSequence truncate_angles(const transfer::EulerSequence& seq, int digits) {
    const double scale = std::pow(10.0, digits);
    transfer::EulerSequence out;
    out.steps.reserve(seq.size());
    for (const transfer::Step& s : seq.steps) {
        out.steps.push_back({std::round(s.angle / kPi * scale) / scale * kPi, s.axis});
    }
    return out;
}

std::vector<double> dense_angles(const transfer::EulerSequence& seq, std::size_t min_len) {
    std::vector<double> out;
    transfer::Axis expect = transfer::Axis::H;
    for (const transfer::Step& s : seq.steps) {
        while (s.axis != expect) {
            out.push_back(0.0);
            expect = expect == transfer::Axis::H ? transfer::Axis::G : transfer::Axis::H;
        }
        out.push_back(s.angle / kPi);
        expect = expect == transfer::Axis::H ? transfer::Axis::G : transfer::Axis::H;
    }
    while (out.size() < min_len) out.push_back(0.0);
    return out;
}

ComputedRow compute_row(const ReferenceRow& ref, int digits) {
    ComputedRow row;
    row.gate = ref.gate;
    row.kappa = ref.kappa;

    const Mat2 gate = *gates::gate_by_name(ref.gate);
    const Mat3 target = so3_from_su2(gate);
    const AxisFrame frame = AxisFrame::from_kappa(ref.kappa);
    const AxisFrame ortho = AxisFrame::from_kappa(kInf);

    const decomp::DecompositionResult dec = decomp::generalized_euler_angles(target, frame);
    row.sequence = dec.sequence;
    row.fidelity_full = fidelity::gate_fidelity(gate, decomp::reconstruct_su2(dec.sequence, frame));
    row.fidelity_truncated = fidelity::gate_fidelity(
        gate, decomp::reconstruct_su2(truncate_angles(dec.sequence, digits), frame));

    const transfer::EulerSequence standard =
        decomp::generalized_euler_angles(target, ortho).sequence;
    row.e0 = fidelity::standard_sequence_error(standard, ref.kappa, gate).error;
    row.e0_delta = std::abs(row.e0 - ref.e0_percent / 100.0);

    const std::size_t n = std::max<std::size_t>(ref.n_angles, dec.sequence.size()) | 1u;
    row.angles_pi = dense_angles(dec.sequence, n);
    std::vector<double> want(ref.angles_pi.begin(), ref.angles_pi.begin() + ref.n_angles);
    want.resize(row.angles_pi.size(), 0.0);

    bool direct = true;
    for (std::size_t i = 0; i < want.size(); ++i) {
        if (circular_delta_pi(row.angles_pi[i], want[i]) > kAngleTolPi) direct = false;
    }
    if (direct) {
        row.match = AngleMatch::Direct;
    } else {
        // Does the reference row itself realize the target rotation?
        transfer::EulerSequence ref_seq;
        for (int i = 0; i < ref.n_angles; ++i) {
            ref_seq.steps.push_back(
                {ref.angles_pi[i] * kPi, i % 2 == 0 ? transfer::Axis::H : transfer::Axis::G});
        }
        const double ref_fid =
            fidelity::gate_fidelity(gate, decomp::reconstruct_su2(ref_seq, frame));
        row.match = ref_fid >= 1.0 - 1e-6 ? AngleMatch::Equivalent : AngleMatch::Mismatch;
    }
    row.flagged = row.match != AngleMatch::Direct || row.e0_delta > 1e-6;
    return row;
}

std::vector<ComputedRow> compute_table(int digits) {
    std::vector<ComputedRow> rows;
    rows.reserve(reference_rows().size());
    for (const ReferenceRow& r : reference_rows()) rows.push_back(compute_row(r, digits));
    return rows;
}

}  // namespace rotkit::table
