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

// Command line front end: decomposition, state transfer, the reference
// table, CNOT error sweeps, and the tilt fidelity model, with table, CSV and
// JSON output.  Angles are read and printed in units of pi unless --radians
// is given.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rotkit/cartan.hpp"
#include "rotkit/euler_decomp.hpp"
#include "rotkit/fidelity.hpp"
#include "rotkit/gates.hpp"
#include "rotkit/serialize.hpp"
#include "rotkit/state_transfer.hpp"
#include "rotkit/table.hpp"

namespace {

using nlohmann::json;
using namespace rotkit;

constexpr double kInf = std::numeric_limits<double>::infinity();

struct CommonOpts {
    std::string kappa = "inf";
    std::vector<double> axes;  // hx,hy,hz,gx,gy,gz
    int digits = 4;
    std::string format = "table";
    bool radians = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_frame = true) {
    if (with_frame) {
        cmd->add_option("--kappa", o.kappa,
                        "axis ratio kappa (>0) or 'inf' for orthogonal axes");
        cmd->add_option("--axes", o.axes, "explicit axes hx,hy,hz,gx,gy,gz")
            ->delimiter(',')
            ->expected(6);
    }
    cmd->add_option("--digits", o.digits, "printed angle decimals (units of pi)")
        ->check(CLI::Range(1, 15));
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    cmd->add_flag("--radians", o.radians, "read and print angles in radians");
}

double parse_kappa(const std::string& s) {
    if (s == "inf" || s == "Inf" || s == "INF") return kInf;
    const double k = std::stod(s);
    if (!(k > 0)) throw FrameError("kappa must be positive");
    return k;
}

struct FrameSpec {
    AxisFrame frame;
    double kappa = kInf;
    std::optional<std::array<double, 6>> axes;
};

FrameSpec make_frame(const CommonOpts& o) {
    FrameSpec fs{AxisFrame::from_kappa(kInf)};
    if (!o.axes.empty()) {
        std::array<double, 6> a;
        std::copy(o.axes.begin(), o.axes.end(), a.begin());
        fs.frame = AxisFrame::from_axes(Vec3(a[0], a[1], a[2]), Vec3(a[3], a[4], a[5]));
        fs.axes = a;
        fs.kappa = std::numeric_limits<double>::quiet_NaN();
    } else {
        fs.kappa = parse_kappa(o.kappa);
        fs.frame = AxisFrame::from_kappa(fs.kappa);
    }
    return fs;
}

double in_angle(double v, const CommonOpts& o) { return o.radians ? v : v * kPi; }

std::string fmt(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

std::string fmt_angle(double rad, const CommonOpts& o) {
    return o.radians ? fmt(rad, o.digits + 2) : fmt(rad / kPi, o.digits);
}

std::string axis_name(transfer::Axis a) { return a == transfer::Axis::H ? "H1" : "H2"; }

std::string kappa_label(double kappa) {
    if (std::isnan(kappa)) return "axes";
    if (std::isinf(kappa)) return "inf";
    std::ostringstream os;
    os << kappa;
    return os.str();
}

json kappa_json(const FrameSpec& fs) {
    if (fs.axes) return nullptr;
    if (std::isinf(fs.kappa)) return "inf";
    return fs.kappa;
}

// ---------------------------------------------------------------- decompose

struct DecomposeArgs {
    CommonOpts common;
    std::string gate;
    std::vector<double> params;     // alpha,beta,gamma
    std::vector<double> generator;  // phi,nx,ny,nz
};

int run_decompose(const DecomposeArgs& a) {
    const FrameSpec fs = make_frame(a.common);
    Mat2 u;
    std::string label;
    if (!a.gate.empty()) {
        const auto g = gates::gate_by_name(a.gate);
        if (!g) {
            std::cerr << "unknown gate '" << a.gate << "'; known:";
            for (const auto& n : gates::gate_names()) std::cerr << ' ' << n;
            std::cerr << '\n';
            return 1;
        }
        u = *g;
        label = a.gate;
    } else if (a.params.size() == 3) {
        u = su2_from_params(in_angle(a.params[0], a.common), in_angle(a.params[1], a.common),
                            in_angle(a.params[2], a.common));
        label = "W(" + fmt(a.params[0], 6) + "," + fmt(a.params[1], 6) + "," +
                fmt(a.params[2], 6) + ")";
    } else if (a.generator.size() == 4) {
        u = gates::gate_from_generator(in_angle(a.generator[0], a.common),
                                       Vec3(a.generator[1], a.generator[2], a.generator[3]));
        label = "exp(i*phi*n.sigma)";
    } else {
        std::cerr << "decompose needs one of --gate, --params a,b,g, --generator phi,nx,ny,nz\n";
        return 1;
    }

    const decomp::DecompositionResult dec =
        decomp::generalized_euler_angles(so3_from_su2(u), fs.frame);
    serialize::DecomposeReport rep;
    rep.gate = label;
    rep.kappa = fs.kappa;
    rep.axes = fs.axes;
    rep.zeta_rad = fs.frame.zeta;
    rep.steps = dec.sequence;
    rep.lowenthal_bound = decomp::lowenthal_bound(fs.frame.zeta);
    rep.fidelity_full =
        fidelity::gate_fidelity(u, decomp::reconstruct_su2(dec.sequence, fs.frame));
    rep.fidelity_truncated = fidelity::gate_fidelity(
        u, decomp::reconstruct_su2(table::truncate_angles(dec.sequence, a.common.digits),
                                   fs.frame));

    if (a.common.format == "json") {
        std::cout << serialize::to_json(rep).dump(2) << '\n';
    } else if (a.common.format == "csv") {
        std::cout << "step,angle" << (a.common.radians ? "_rad" : "_pi") << ",axis\n";
        for (std::size_t i = 0; i < rep.steps.size(); ++i) {
            std::cout << i << ',' << fmt_angle(rep.steps.steps[i].angle, a.common) << ','
                      << axis_name(rep.steps.steps[i].axis) << '\n';
        }
    } else {
        std::cout << "gate:               " << label << '\n';
        std::cout << "kappa:              " << kappa_label(fs.kappa) << '\n';
        std::cout << "zeta:               " << fmt(fs.frame.zeta, 9) << " rad\n";
        std::cout << "steps (" << (a.common.radians ? "rad" : "units of pi") << "):";
        if (rep.steps.empty()) std::cout << "  (empty: identity)";
        std::cout << '\n';
        for (const transfer::Step& s : rep.steps.steps) {
            std::cout << "  " << fmt_angle(s.angle, a.common) << "  about " << axis_name(s.axis)
                      << '\n';
        }
        std::cout << "step count:         " << rep.steps.size() << '\n';
        std::cout << "lowenthal bound:    " << rep.lowenthal_bound << '\n';
        std::cout << "fidelity full:      " << fmt(rep.fidelity_full, 15) << '\n';
        std::cout << "fidelity truncated: " << fmt(rep.fidelity_truncated, 15) << '\n';
    }
    return 0;
}

// ------------------------------------------------------------------ transfer

struct TransferArgs {
    CommonOpts common;
    std::vector<double> start;  // theta,phi
    std::vector<double> goal;
};

int run_transfer(const TransferArgs& a) {
    const FrameSpec fs = make_frame(a.common);
    transfer::TransferProblem prob{
        {in_angle(a.start[0], a.common), in_angle(a.start[1], a.common)},
        {in_angle(a.goal[0], a.common), in_angle(a.goal[1], a.common)},
        fs.frame};
    const transfer::EulerSequence seq = transfer::transfer_sequence(prob);
    const Vec3 got =
        transfer::apply_sequence(seq, polar_to_vector(prob.start, fs.frame), fs.frame);
    const double err = (got - polar_to_vector(prob.goal, fs.frame)).norm();

    // The closed-form counts are defined for descending problems.
    transfer::TransferProblem norm = prob;
    if (norm.start.theta < norm.goal.theta) std::swap(norm.start, norm.goal);
    const int n_h = transfer::min_steps_h_first(norm);
    const int n_g = transfer::min_steps_g_first(norm);

    if (a.common.format == "json") {
        json steps = json::array();
        for (const transfer::Step& s : seq.steps) {
            steps.push_back({{"angle_pi", s.angle / kPi}, {"axis", axis_name(s.axis)}});
        }
        json j{{"kappa", kappa_json(fs)},
               {"zeta_rad", fs.frame.zeta},
               {"steps", steps},
               {"step_count", seq.size()},
               {"min_steps_h_first", n_h},
               {"min_steps_g_first", n_g},
               {"endpoint_error", err}};
        std::cout << j.dump(2) << '\n';
    } else if (a.common.format == "csv") {
        std::cout << "step,angle" << (a.common.radians ? "_rad" : "_pi") << ",axis\n";
        for (std::size_t i = 0; i < seq.size(); ++i) {
            std::cout << i << ',' << fmt_angle(seq.steps[i].angle, a.common) << ','
                      << axis_name(seq.steps[i].axis) << '\n';
        }
    } else {
        std::cout << "zeta:              " << fmt(fs.frame.zeta, 9) << " rad\n";
        std::cout << "steps (" << (a.common.radians ? "rad" : "units of pi") << "):";
        if (seq.empty()) std::cout << "  (empty: start equals goal)";
        std::cout << '\n';
        for (const transfer::Step& s : seq.steps) {
            std::cout << "  " << fmt_angle(s.angle, a.common) << "  about " << axis_name(s.axis)
                      << '\n';
        }
        std::cout << "step count:        " << seq.size() << '\n';
        std::cout << "min steps N (h):   " << n_h << '\n';
        std::cout << "min steps N' (g):  " << n_g << '\n';
        std::cout << "endpoint error:    " << fmt(err, 15) << '\n';
    }
    return 0;
}

// ------------------------------------------------------------------- table1

int run_table1(const CommonOpts& o) {
    const std::vector<table::ComputedRow> rows = table::compute_table(o.digits);
    if (o.format == "json") {
        json out = json::array();
        for (const auto& r : rows) {
            json angles = json::array();
            for (double a : r.angles_pi) angles.push_back(a);
            out.push_back({{"gate", r.gate},
                           {"kappa", std::isinf(r.kappa) ? json("inf") : json(r.kappa)},
                           {"angles_pi", angles},
                           {"e0_percent", 100.0 * r.e0},
                           {"fidelity_truncated", r.fidelity_truncated},
                           {"match", r.match == table::AngleMatch::Direct
                                         ? "direct"
                                         : (r.match == table::AngleMatch::Equivalent
                                                ? "equivalent"
                                                : "mismatch")},
                           {"flagged", r.flagged}});
        }
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    if (o.format == "csv") {
        std::cout << "gate,kappa,e0_percent,a1_pi,a2_pi,a3_pi,a4_pi,match,flagged\n";
        for (const auto& r : rows) {
            std::vector<double> a = r.angles_pi;
            a.resize(4, 0.0);
            std::cout << r.gate << ',' << kappa_label(r.kappa) << ',' << fmt(100 * r.e0, 4);
            for (double v : a) std::cout << ',' << fmt(v, o.digits);
            std::cout << ','
                      << (r.match == table::AngleMatch::Direct
                              ? "direct"
                              : (r.match == table::AngleMatch::Equivalent ? "equivalent"
                                                                          : "mismatch"))
                      << ',' << (r.flagged ? 1 : 0) << '\n';
        }
        return 0;
    }
    std::cout << "gate   kappa   E0(%)      angles (units of pi)            note\n";
    for (const auto& r : rows) {
        std::vector<double> a = r.angles_pi;
        a.resize(4, 0.0);
        std::cout << r.gate;
        for (std::size_t i = r.gate.size(); i < 7; ++i) std::cout << ' ';
        std::string k = kappa_label(r.kappa);
        std::cout << k;
        for (std::size_t i = k.size(); i < 8; ++i) std::cout << ' ';
        std::cout << fmt(100 * r.e0, 4) << "   ";
        for (double v : a) std::cout << fmt(v, o.digits) << ' ';
        if (r.match == table::AngleMatch::Equivalent) std::cout << "  equivalent form";
        if (r.match == table::AngleMatch::Mismatch) std::cout << "  MISMATCH";
        if (r.flagged && r.match == table::AngleMatch::Direct) std::cout << "  flagged";
        std::cout << '\n';
    }
    return 0;
}

// --------------------------------------------------------------- cnot-sweep

struct SweepArgs {
    CommonOpts common;
    std::vector<double> kappas{1, 5, 10, 50, 100};
};

int run_cnot_sweep(const SweepArgs& a) {
    struct Row {
        double kappa, std_err, opt_err;
    };
    std::vector<Row> rows;
    rows.reserve(a.kappas.size());
    for (double k : a.kappas) {
        rows.push_back({k, cartan::cnot_error(k, cartan::Angles::Standard).error,
                        cartan::cnot_error(k, cartan::Angles::Optimized).error});
    }
    if (a.common.format == "json") {
        json out = json::array();
        for (const Row& r : rows) {
            out.push_back({{"kappa", r.kappa},
                           {"error_standard", r.std_err},
                           {"error_optimized", r.opt_err}});
        }
        std::cout << out.dump(2) << '\n';
    } else {
        // csv and table share the sweep layout
        std::cout << "kappa,error_standard,error_optimized\n";
        char buf[128];
        for (const Row& r : rows) {
            std::snprintf(buf, sizeof(buf), "%g,%.12e,%.12e\n", r.kappa, r.std_err, r.opt_err);
            std::cout << buf;
        }
    }
    return 0;
}

// ----------------------------------------------------------------- fidelity

struct FidelityArgs {
    CommonOpts common;
    std::optional<double> beta;
    std::optional<double> max_error;
};

int run_fidelity(const FidelityArgs& a) {
    const double kappa = parse_kappa(a.common.kappa);
    const fidelity::TiltModel m = fidelity::TiltModel::from_kappa(kappa);
    json j{{"kappa", std::isinf(kappa) ? json("inf") : json(kappa)},
           {"zeta_rad", m.zeta},
           {"epsilon", m.epsilon},
           {"max_gate_error", 1.0 - std::abs(std::cos(m.epsilon * kPi / 2))},
           {"avg_gate_error", fidelity::average_tilt_error(m.epsilon)}};
    if (a.beta) {
        const double beta = in_angle(*a.beta, a.common);
        j["beta_rad"] = beta;
        j["tilted_z_fidelity"] = fidelity::tilted_z_fidelity(beta, m.epsilon);
    }
    if (a.max_error) j["threshold_kappa"] = fidelity::threshold_kappa(*a.max_error);
    if (a.common.format == "json") {
        std::cout << j.dump(2) << '\n';
    } else if (a.common.format == "csv") {
        std::string header, values;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!header.empty()) {
                header += ',';
                values += ',';
            }
            header += it.key();
            values += it.value().dump();
        }
        std::cout << header << '\n' << values << '\n';
    } else {
        for (auto it = j.begin(); it != j.end(); ++it) {
            std::cout << it.key() << ": " << it.value().dump() << '\n';
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-axis rotation sequences: gate decomposition, state transfer and "
                 "tilted-axis gate errors"};
    app.require_subcommand(1);

    DecomposeArgs dec;
    CLI::App* cd = app.add_subcommand(
        "decompose", "decompose a single-qubit gate over the two frame axes");
    cd->add_option("--gate", dec.gate, "named gate (see --help-gates)");
    cd->add_option("--params", dec.params, "W parameters alpha,beta,gamma")
        ->delimiter(',')
        ->expected(3);
    cd->add_option("--generator", dec.generator, "generator form phi,nx,ny,nz")
        ->delimiter(',')
        ->expected(4);
    add_common(cd, dec.common);

    TransferArgs tr;
    CLI::App* ct = app.add_subcommand(
        "transfer", "steer a point on the unit sphere to another (polar coordinates "
                    "relative to the frame; min-step counts refer to the descending problem)");
    ct->add_option("--start", tr.start, "start theta,phi")->delimiter(',')->expected(2)->required();
    ct->add_option("--goal", tr.goal, "goal theta,phi")->delimiter(',')->expected(2)->required();
    add_common(ct, tr.common);

    CommonOpts tbl;
    CLI::App* cb = app.add_subcommand("table1", "reference decompositions of the named gates");
    add_common(cb, tbl, false);

    SweepArgs sw;
    CLI::App* cs = app.add_subcommand("cnot-sweep",
                                      "CNOT error with standard vs optimized angles per kappa");
    cs->add_option("--kappas", sw.kappas, "kappa values")->delimiter(',');
    add_common(cs, sw.common, false);

    FidelityArgs fa;
    CLI::App* cf = app.add_subcommand("fidelity", "tilt model figures for a given kappa");
    cf->add_option("--kappa", fa.common.kappa, "axis ratio kappa or 'inf'");
    double beta_v = 0, maxerr_v = 0;
    CLI::Option* ob = cf->add_option("--beta", beta_v, "z-rotation angle for the closed form");
    CLI::Option* om = cf->add_option("--max-error", maxerr_v, "error budget for threshold_kappa");
    cf->add_option("--digits", fa.common.digits)->check(CLI::Range(1, 15));
    cf->add_option("--format", fa.common.format)->check(CLI::IsMember({"json", "csv", "table"}));
    cf->add_flag("--radians", fa.common.radians);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cd->parsed()) return run_decompose(dec);
        if (ct->parsed()) return run_transfer(tr);
        if (cb->parsed()) return run_table1(tbl);
        if (cs->parsed()) return run_cnot_sweep(sw);
        if (cf->parsed()) {
            if (ob->count()) fa.beta = beta_v;
            if (om->count()) fa.max_error = maxerr_v;
            return run_fidelity(fa);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
