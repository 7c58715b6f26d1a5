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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rotkit/cartan.hpp"
#include "rotkit/euler_decomp.hpp"
#include "rotkit/fidelity.hpp"
#include "rotkit/gates.hpp"
#include "rotkit/state_transfer.hpp"
#include "rotkit/table.hpp"

namespace py = pybind11;
using namespace rotkit;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

AxisFrame frame_from(py::object kappa, py::object axes) {
    if (!axes.is_none()) {
        const auto a = axes.cast<std::array<double, 6>>();
        return AxisFrame::from_axes(Vec3(a[0], a[1], a[2]), Vec3(a[3], a[4], a[5]));
    }
    if (kappa.is_none()) return AxisFrame::from_kappa(kInf);
    return AxisFrame::from_kappa(kappa.cast<double>());
}

py::list steps_to_py(const transfer::EulerSequence& seq) {
    py::list out;
    for (const transfer::Step& s : seq.steps) {
        out.append(py::make_tuple(s.angle / kPi, s.axis == transfer::Axis::H ? "H1" : "H2"));
    }
    return out;
}

transfer::EulerSequence steps_from_py(const py::iterable& steps) {
    transfer::EulerSequence seq;
    for (py::handle h : steps) {
        const auto t = h.cast<std::pair<double, std::string>>();
        seq.steps.push_back({t.first * kPi,
                             t.second == "H1" || t.second == "H" ? transfer::Axis::H
                                                                 : transfer::Axis::G});
    }
    return seq;
}

Mat2 gate_from(py::object gate) {
    if (py::isinstance<py::str>(gate)) {
        const auto g = gates::gate_by_name(gate.cast<std::string>());
        if (!g) throw std::invalid_argument("unknown gate name");
        return *g;
    }
    return gate.cast<Mat2>();
}

}  // namespace

PYBIND11_MODULE(_rotkit, m) {
    m.doc() = "Two-axis rotation sequences: gate decomposition, Bloch-sphere state "
              "transfer and tilted-axis gate errors.";

    py::register_exception<NumericDomainError>(m, "NumericDomainError");
    py::register_exception<FrameError>(m, "FrameError");

    m.def("su2_from_params", &su2_from_params, py::arg("alpha"), py::arg("beta"),
          py::arg("gamma"));
    m.def(
        "su2_exp", [](const Vec3& d, double t) { return su2_exp({d}, t); }, py::arg("d"),
        py::arg("t"));
    m.def("so3_from_su2", &so3_from_su2, py::arg("u"));
    m.def("so3_from_generator", &so3_from_generator, py::arg("n"), py::arg("phi"));
    m.def("rotation_about_axis", &rotation_about_axis, py::arg("u"), py::arg("eps"));
    m.def("gate_from_generator", &gates::gate_from_generator, py::arg("phi"), py::arg("n"));
    m.def("gate_matrix", [](const std::string& name) {
        const auto g = gates::gate_by_name(name);
        if (!g) throw std::invalid_argument("unknown gate name");
        return *g;
    });
    m.def("gate_names", [] { return gates::gate_names(); });

    m.def(
        "decompose",
        [](py::object gate, py::object kappa, py::object axes, int digits) {
            const AxisFrame frame = frame_from(kappa, axes);
            const Mat2 u = gate_from(gate);
            const auto dec = decomp::generalized_euler_angles(so3_from_su2(u), frame);
            py::dict out;
            out["zeta_rad"] = frame.zeta;
            out["steps"] = steps_to_py(dec.sequence);
            out["lowenthal_bound"] = decomp::lowenthal_bound(frame.zeta);
            out["fidelity_full"] =
                fidelity::gate_fidelity(u, decomp::reconstruct_su2(dec.sequence, frame));
            out["fidelity_truncated"] = fidelity::gate_fidelity(
                u, decomp::reconstruct_su2(table::truncate_angles(dec.sequence, digits), frame));
            out["residual"] = dec.residual;
            return out;
        },
        py::arg("gate"), py::arg("kappa") = py::none(), py::arg("axes") = py::none(),
        py::arg("digits") = 4,
        "Decompose a named gate or 2x2 special-unitary matrix over the two frame axes.");

    m.def(
        "reconstruct",
        [](const py::iterable& steps, py::object kappa, py::object axes) {
            return decomp::reconstruct(steps_from_py(steps), frame_from(kappa, axes));
        },
        py::arg("steps"), py::arg("kappa") = py::none(), py::arg("axes") = py::none());
    m.def(
        "reconstruct_su2",
        [](const py::iterable& steps, py::object kappa, py::object axes) {
            return decomp::reconstruct_su2(steps_from_py(steps), frame_from(kappa, axes));
        },
        py::arg("steps"), py::arg("kappa") = py::none(), py::arg("axes") = py::none());
    m.def("standard_euler_angles",
          [](const Mat2& w) { return steps_to_py(decomp::standard_euler_angles(w)); });
    m.def("lowenthal_bound", &decomp::lowenthal_bound, py::arg("zeta"));
    m.def("lowenthal_bound_kappa", &decomp::lowenthal_bound_kappa, py::arg("kappa"));

    m.def(
        "transfer",
        [](std::pair<double, double> start, std::pair<double, double> goal, py::object kappa,
           py::object axes) {
            const AxisFrame frame = frame_from(kappa, axes);
            transfer::TransferProblem prob{{start.first * kPi, start.second * kPi},
                                           {goal.first * kPi, goal.second * kPi},
                                           frame};
            const auto seq = transfer::transfer_sequence(prob);
            const Vec3 got =
                transfer::apply_sequence(seq, polar_to_vector(prob.start, frame), frame);
            transfer::TransferProblem norm = prob;
            if (norm.start.theta < norm.goal.theta) std::swap(norm.start, norm.goal);
            py::dict out;
            out["steps"] = steps_to_py(seq);
            out["endpoint_error"] = (got - polar_to_vector(prob.goal, frame)).norm();
            out["min_steps_h_first"] = transfer::min_steps_h_first(norm);
            out["min_steps_g_first"] = transfer::min_steps_g_first(norm);
            return out;
        },
        py::arg("start"), py::arg("goal"), py::arg("kappa") = py::none(),
        py::arg("axes") = py::none(),
        "Steer (theta, phi) start to goal (units of pi) about the frame axes.");

    m.def("gate_fidelity", [](const Mat2& u, const Mat2& v) { return fidelity::gate_fidelity(u, v); });
    m.def("gate_fidelity4",
          [](const Mat4& u, const Mat4& v) { return fidelity::gate_fidelity(u, v); });
    m.def("tilted_z_fidelity", &fidelity::tilted_z_fidelity, py::arg("beta"), py::arg("epsilon"));
    m.def("average_tilt_error", &fidelity::average_tilt_error, py::arg("epsilon"));
    m.def("threshold_kappa", &fidelity::threshold_kappa, py::arg("max_error"));
    m.def(
        "tilt_model",
        [](double kappa) {
            const auto t = fidelity::TiltModel::from_kappa(kappa);
            py::dict out;
            out["kappa"] = t.kappa;
            out["zeta"] = t.zeta;
            out["epsilon"] = t.epsilon;
            return out;
        },
        py::arg("kappa"));
    m.def(
        "standard_gate_error",
        [](py::object gate, double kappa) {
            const Mat2 u = gate_from(gate);
            const auto seq = decomp::generalized_euler_angles(
                                 so3_from_su2(u), AxisFrame::from_kappa(kInf))
                                 .sequence;
            return fidelity::standard_sequence_error(seq, kappa, u).error;
        },
        py::arg("gate"), py::arg("kappa"),
        "Error when the orthogonal-frame sequence runs on tilted hardware.");

    m.def("ising_flow", &cartan::ising_flow, py::arg("alpha"));
    m.def("cnot_matrix", [] { return cartan::cnot_matrix(); });
    m.def(
        "cnot_error",
        [](double kappa, const std::string& mode) {
            return cartan::cnot_error(kappa, mode == "standard" ? cartan::Angles::Standard
                                                                : cartan::Angles::Optimized)
                .error;
        },
        py::arg("kappa"), py::arg("mode"));

    m.def("table1", [] {
        py::list out;
        for (const auto& r : table::compute_table()) {
            py::dict d;
            d["gate"] = r.gate;
            d["kappa"] = r.kappa;
            d["angles_pi"] = r.angles_pi;
            d["e0"] = r.e0;
            d["fidelity_truncated"] = r.fidelity_truncated;
            d["match"] = r.match == table::AngleMatch::Direct
                             ? "direct"
                             : (r.match == table::AngleMatch::Equivalent ? "equivalent"
                                                                         : "mismatch");
            out.append(d);
        }
        return out;
    });
}
