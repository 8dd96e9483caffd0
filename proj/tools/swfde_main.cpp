// SPDX-License-Identifier: Apache-2.0
//
// swfde - spherical-wave antenna de-embedding from near-field surface dumps
// Copyright (C) 2026 the swfde authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// swfde command line: de-embedding pipeline around NFD traces and
// coefficient/channel/far-field CSV files.
//
//   mesh        box mesh metadata (JSON)
//   synth       dipole scene and/or coefficients -> NFD trace
//   decompose   NFD trace -> coefficient CSV (b | a | bprime | ls)
//   deembed     coefficients x channel matrix -> received coefficients
//   flow        signal-flow solve of the original and equivalent scenarios
//   farfield    coefficients -> far-field CSV (complex or dBi)
//   compare-ls  orthogonality vs pseudo-inverse accuracy and conditioning
//   validate    built-in acceptance suite
//
// Exit codes: 0 success, 1 validation/numerical failure, 2 usage/format error.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>

#include "swfde/decompose.hpp"
#include "swfde/io.hpp"
#include "swfde/sources.hpp"
#include "swfde/validate.hpp"

namespace {

using namespace swfde;

Vec3 parse_vec3(const std::string& s, const char* what) {
    Vec3 v;
    if (std::sscanf(s.c_str(), "%lf,%lf,%lf", &v.x, &v.y, &v.z) != 3)
        throw CLI::ValidationError(std::string(what) + ": expected three comma-separated numbers");
    return v;
}

DipoleSource parse_dipole(const std::string& s, DipoleSource::Kind kind) {
    double v[9];
    if (std::sscanf(s.c_str(), "%lf,%lf,%lf,%lf,%lf,%lf,%lf,%lf,%lf", &v[0], &v[1], &v[2], &v[3],
                    &v[4], &v[5], &v[6], &v[7], &v[8]) != 9)
        throw CLI::ValidationError("dipole: expected x,y,z,mx_re,mx_im,my_re,my_im,mz_re,mz_im");
    DipoleSource d;
    d.position = {v[0], v[1], v[2]};
    d.moment = {{v[3], v[4]}, {v[5], v[6]}, {v[7], v[8]}, VecBasis::cartesian};
    d.kind = kind;
    return d;
}

BoxSpec parse_box(const std::string& box, int cells) {
    double v[6];
    if (std::sscanf(box.c_str(), "%lf,%lf,%lf,%lf,%lf,%lf", &v[0], &v[1], &v[2], &v[3], &v[4],
                    &v[5]) != 6)
        throw CLI::ValidationError("--box: expected cx,cy,cz,hx,hy,hz");
    BoxSpec spec = BoxSpec::cube({v[0], v[1], v[2]}, 1.0, cells);
    spec.half_extents = {v[3], v[4], v[5]};
    return spec;
}

QuadratureRule parse_rule(const std::string& s) {
    if (s == "midpoint") return QuadratureRule::midpoint;
    if (s == "gauss") return QuadratureRule::gauss_legendre;
    throw CLI::ValidationError("--rule: expected 'midpoint' or 'gauss'");
}

// ---------------------------------------------------------------------------

int cmd_mesh(const std::string& center, const std::string& half, int cells,
             const std::string& rule, const std::string& out) {
    BoxSpec spec = BoxSpec::cube(parse_vec3(center, "--center"), 1.0, cells);
    spec.half_extents = parse_vec3(half, "--half-extents");
    const SurfaceMesh mesh = build_box_mesh(spec, parse_rule(rule));
    nlohmann::json j;
    j["center"] = {spec.center.x, spec.center.y, spec.center.z};
    j["half_extents"] = {spec.half_extents.x, spec.half_extents.y, spec.half_extents.z};
    j["cells_per_face"] = spec.cells_per_face;
    j["rule"] = rule;
    j["sample_count"] = mesh.size();
    j["total_area_m2"] = mesh.total_area();
    const Vec3 ni = mesh.normal_integral();
    j["normal_integral"] = {ni.x, ni.y, ni.z};
    atomic_write(out, j.dump(2) + "\n");
    std::cout << "wrote " << out << " (" << mesh.size() << " samples, area " << mesh.total_area()
              << " m^2)\n";
    return 0;
}

int cmd_synth(const std::string& box, int cells, const std::string& rule, double freq,
              const std::vector<std::string>& edipoles, const std::vector<std::string>& mdipoles,
              const std::string& coeffs_b, const std::string& coeffs_a, const std::string& origin,
              const std::string& out) {
    const Medium med = Medium::free_space(freq);
    const BoxSpec spec = parse_box(box, cells);
    const SurfaceMesh mesh = build_box_mesh(spec, parse_rule(rule));

    Scene scene;
    scene.medium = med;
    for (const auto& s : edipoles) scene.sources.push_back(parse_dipole(s, DipoleSource::Kind::electric));
    for (const auto& s : mdipoles) scene.sources.push_back(parse_dipole(s, DipoleSource::Kind::magnetic));
    if (scene.sources.empty() && coeffs_b.empty() && coeffs_a.empty())
        throw CLI::ValidationError("synth: need at least one dipole or a coefficient file");

    NfdFile file;
    file.trace = sample_scene_on_mesh(scene, mesh);
    file.provenance = spec;

    if (!coeffs_b.empty() || !coeffs_a.empty()) {
        CoefficientSet b, a;
        if (!coeffs_b.empty()) b = read_coefficients(coeffs_b);
        if (!coeffs_a.empty()) a = read_coefficients(coeffs_a);
        const Vec3 org = parse_vec3(origin, "--origin");
        std::vector<Vec3> pts(mesh.size());
        for (std::size_t i = 0; i < mesh.size(); ++i) pts[i] = mesh.samples[i].position;
        const auto eh = synthesize_from_coefficients(b, a, med, pts, org);
        for (std::size_t i = 0; i < mesh.size(); ++i) {
            file.trace.E[i] = file.trace.E[i] + eh[i].E;
            file.trace.H[i] = file.trace.H[i] + eh[i].H;
        }
    }
    write_nfd(out, file);
    std::cout << "wrote " << out << " (" << file.trace.mesh.size() << " samples)\n";
    return 0;
}

int cmd_decompose(const std::string& in, const std::string& basis, int nmax,
                  const std::string& origin, double freq, const std::string& out) {
    const NfdFile file = read_nfd(in);
    if (freq > 0.0 && std::abs(freq - file.trace.frequency) > 1e-12 * freq)
        throw io_format_error("decompose: --freq " + format_double(freq) +
                              " does not match the trace frequency " +
                              format_double(file.trace.frequency));
    const Medium med = Medium::free_space(file.trace.frequency);
    const Vec3 org = parse_vec3(origin, "--origin");
    const ModeSet ms(nmax);

    CoefficientSet result;
    if (basis == "b") result = decompose_outgoing(file.trace, ms, med, org);
    else if (basis == "a") result = decompose_incoming(file.trace, ms, med, org);
    else if (basis == "bprime") result = decompose_radiating(file.trace, ms, med, org);
    else if (basis == "ls") {
        const WaveType b[1] = {WaveType::outgoing};
        auto ls = decompose_leastsquares(file.trace, ms, med, org, b);
        std::cout << "least squares: relative residual " << ls.relative_residual
                  << ", condition number " << ls.condition_number
                  << (ls.rank_deficient ? " (rank deficient)" : "") << '\n';
        result = std::move(ls.coefficients[0]);
    } else {
        throw CLI::ValidationError("--basis: expected b, a, bprime or ls");
    }
    write_coefficients(out, result);
    std::cout << "wrote " << out << " (" << result.values.size() << " modes, kind "
              << to_string(result.kind) << ")\n";
    return 0;
}

int cmd_deembed(const std::string& coeffs, const std::string& channel, const std::string& out) {
    const CoefficientSet b_t = read_coefficients(coeffs);
    const ChannelMatrix m = read_channel_matrix(channel);
    const CoefficientSet a_r = apply_channel(m, b_t);
    write_coefficients(out, a_r);
    std::cout << "wrote " << out << " (received coefficients, |a_R| = " << a_r.norm() << ")\n";
    return 0;
}

int cmd_flow(const std::string& transmission, const std::string& scattering,
             const std::string& m11_path, const std::string& receiving, const std::string& v_str,
             const std::string& case_str, const std::string& out_dir) {
    const CoefficientSet t = read_coefficients(transmission);
    SignalFlowModel model;
    model.transmission = to_eigen(t);
    model.antenna_scattering = read_channel_matrix(scattering).entries;
    model.m11 = read_channel_matrix(m11_path);
    if (model.m11.role != ChannelMatrix::Role::self_reflection)
        std::cerr << "note: --m11 file has role M, treating it as M11\n";
    if (!receiving.empty()) model.receiving = to_eigen(read_coefficients(receiving));
    double vr = 1.0, vi = 0.0;
    if (!v_str.empty() && std::sscanf(v_str.c_str(), "%lf,%lf", &vr, &vi) != 2)
        throw CLI::ValidationError("--v: expected re,im");
    model.port_wave = {vr, vi};

    EquivalenceCase eq_case;
    if (case_str == "love") eq_case = EquivalenceCase::love;
    else if (case_str == "naive") eq_case = EquivalenceCase::naive_outgoing;
    else if (case_str == "corrected") eq_case = EquivalenceCase::outgoing_corrected;
    else throw CLI::ValidationError("--case: expected love, naive or corrected");

    const FlowSolution sol = solve_original_flow(model);
    const CoefficientSet b = from_eigen(sol.b, CoefficientKind::outgoing, t.modeset, t.medium);
    const CoefficientSet a = from_eigen(sol.a, CoefficientKind::incoming, t.modeset, t.medium);
    const auto [bp, ap] = equivalent_source(eq_case, b, a);
    const auto eq = solve_equivalent_flow(bp, ap, model.m11);

    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    write_coefficients(fs::path(out_dir) / "b.csv", b);
    write_coefficients(fs::path(out_dir) / "a.csv", a);
    write_coefficients(fs::path(out_dir) / "bprime.csv", bp);
    write_coefficients(fs::path(out_dir) / "aprime.csv", ap);
    write_coefficients(fs::path(out_dir) / "bhat.csv", eq.b_hat);
    write_coefficients(fs::path(out_dir) / "ahat.csv", eq.a_hat);

    double mb = 0.0, ma = 0.0;
    for (std::size_t i = 0; i < b.values.size(); ++i) {
        mb += std::norm(eq.b_hat.values[i] - b.values[i]);
        ma += std::norm(eq.a_hat.values[i] - a.values[i]);
    }
    std::cout << "case " << case_str << ": |b_hat - b| = " << std::sqrt(mb)
              << ", |a_hat - a| = " << std::sqrt(ma);
    if (model.receiving.size() > 0) std::cout << ", w = " << sol.received_wave;
    std::cout << "\nwrote b/a/bprime/aprime/bhat/ahat CSV files to " << out_dir << '\n';
    return 0;
}

int cmd_farfield(const std::string& coeffs, double dtheta, double dphi, double cut_phi,
                 bool has_cut, bool dbi, const std::string& out) {
    const CoefficientSet c = read_coefficients(coeffs);
    const Medium med = c.medium;
    const FarFieldGrid grid =
        has_cut ? FarFieldGrid::phi_cut(cut_phi, dtheta) : FarFieldGrid::full_sphere(dtheta, dphi);
    const FarFieldPattern pattern = superpose_farfields(c, med, grid);
    if (dbi) {
        write_farfield_dbi(out, pattern, directivity(pattern, radiated_power(c)));
    } else {
        write_farfield(out, pattern);
    }
    std::cout << "wrote " << out << " (" << pattern.grid.size() << " directions)\n";
    return 0;
}

int cmd_compare_ls(int nmax, double freq, const std::string& out) {
    const Medium med = Medium::free_space(freq);
    const double lambda = 2.0 * pi / med.k;
    std::ostringstream os;
    os << "half_extent_m,kr_max,basis,cond,sv_max,sv_min,ls_vs_orthogonality_rel_err,ls_rel_residual\n";

    // Three box sizes; the smallest two sit in the kr_max < 0.2 regime where
    // conditioning is expected to blow up.
    const double halves[3] = {0.25 * lambda, 0.05 * lambda, 0.008 * lambda};
    std::mt19937 rng(31);
    std::normal_distribution<double> d(0.0, 1.0);
    CoefficientSet b;
    b.kind = CoefficientKind::outgoing;
    b.modeset = ModeSet(nmax);
    b.medium = med;
    b.values.resize(static_cast<std::size_t>(b.modeset.count()));
    for (auto& v : b.values) v = cplx{d(rng), d(rng)};

    for (double half : halves) {
        const SurfaceMesh mesh = build_box_mesh(BoxSpec::cube({0, 0, 0}, half, 16));
        std::vector<Vec3> pts(mesh.size());
        for (std::size_t i = 0; i < mesh.size(); ++i) pts[i] = mesh.samples[i].position;
        const auto eh = synthesize_from_coefficients(b, {}, med, pts, {0, 0, 0});
        FieldTrace trace;
        trace.mesh = mesh;
        trace.frequency = med.frequency;
        trace.E.resize(mesh.size());
        trace.H.resize(mesh.size());
        for (std::size_t i = 0; i < mesh.size(); ++i) {
            trace.E[i] = eh[i].E;
            trace.H[i] = eh[i].H;
        }
        const double kr_max = med.k * half * std::sqrt(3.0);
        for (WaveType wt : {WaveType::regular, WaveType::outgoing}) {
            const WaveType basis[1] = {wt};
            const auto rep = condition_report(mesh, b.modeset, med, {0, 0, 0}, basis);
            const auto ls = decompose_leastsquares(trace, b.modeset, med, {0, 0, 0}, basis);
            const CoefficientSet orth = (wt == WaveType::regular)
                                            ? decompose_radiating(trace, b.modeset, med, {0, 0, 0})
                                            : decompose_outgoing(trace, b.modeset, med, {0, 0, 0});
            double num = 0.0, den = 0.0;
            for (std::size_t i = 0; i < orth.values.size(); ++i) {
                num += std::norm(ls.coefficients[0].values[i] - orth.values[i]);
                den += std::norm(orth.values[i]);
            }
            os << format_double(half) << ',' << format_double(kr_max) << ','
               << (wt == WaveType::regular ? "F1" : "F4") << ','
               << format_double(rep.condition_number) << ',' << format_double(rep.sv_max) << ','
               << format_double(rep.sv_min) << ',' << format_double(std::sqrt(num / den)) << ','
               << format_double(ls.relative_residual) << '\n';
        }
    }
    atomic_write(out, os.str());
    std::cout << "wrote " << out << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spherical-wave antenna de-embedding from near-field surface dumps"};
    app.require_subcommand(1);

    // mesh
    std::string m_center = "0,0,0", m_half = "0.5,0.5,0.5", m_rule = "midpoint", m_out;
    int m_cells = 16;
    auto* mesh_cmd = app.add_subcommand("mesh", "write box mesh metadata as JSON");
    mesh_cmd->add_option("--center", m_center, "box center x,y,z (m)");
    mesh_cmd->add_option("--half-extents", m_half, "half extents hx,hy,hz (m)");
    mesh_cmd->add_option("--cells", m_cells, "cells per face edge")->check(CLI::PositiveNumber);
    mesh_cmd->add_option("--rule", m_rule, "quadrature rule: midpoint | gauss");
    mesh_cmd->add_option("--out", m_out, "output JSON path")->required();

    // synth
    std::string s_box = "0,0,0,0.5,0.5,0.5", s_rule = "midpoint", s_coeffs, s_coeffs_a,
                s_origin = "0,0,0", s_out;
    std::vector<std::string> s_edip, s_mdip;
    int s_cells = 32;
    double s_freq = 0.0;
    auto* synth_cmd = app.add_subcommand("synth", "synthesize an NFD trace from dipoles and/or coefficients");
    synth_cmd->add_option("--box", s_box, "box cx,cy,cz,hx,hy,hz (m)");
    synth_cmd->add_option("--cells", s_cells, "cells per face edge")->check(CLI::PositiveNumber);
    synth_cmd->add_option("--rule", s_rule, "quadrature rule: midpoint | gauss");
    synth_cmd->add_option("--freq", s_freq, "frequency (Hz)")->required();
    synth_cmd->add_option("--electric-dipole", s_edip,
                          "x,y,z,mx_re,mx_im,my_re,my_im,mz_re,mz_im (A*m)");
    synth_cmd->add_option("--magnetic-dipole", s_mdip,
                          "x,y,z,mx_re,mx_im,my_re,my_im,mz_re,mz_im (V*m)");
    synth_cmd->add_option("--coeffs", s_coeffs, "outgoing coefficient CSV to synthesize");
    synth_cmd->add_option("--coeffs-a", s_coeffs_a, "incoming coefficient CSV to synthesize");
    synth_cmd->add_option("--origin", s_origin, "expansion origin for --coeffs");
    synth_cmd->add_option("--out", s_out, "output NFD path")->required();

    // decompose
    std::string d_in, d_basis = "bprime", d_origin = "0,0,0", d_out;
    int d_nmax = 4;
    double d_freq = 0.0;
    auto* dec_cmd = app.add_subcommand("decompose", "decompose an NFD trace into SWF coefficients");
    dec_cmd->add_option("--in", d_in, "input NFD path")->required();
    dec_cmd->add_option("--basis", d_basis, "b | a | bprime | ls (default bprime)");
    dec_cmd->add_option("--nmax", d_nmax, "truncation degree")->check(CLI::PositiveNumber);
    dec_cmd->add_option("--origin", d_origin, "expansion origin x,y,z (m)");
    dec_cmd->add_option("--freq", d_freq, "expected frequency (Hz); must match the trace");
    dec_cmd->add_option("--out", d_out, "output coefficient CSV")->required();

    // deembed
    std::string e_coeffs, e_channel, e_out;
    auto* de_cmd = app.add_subcommand("deembed", "apply a channel matrix: a_R = M b_T");
    de_cmd->add_option("--coeffs", e_coeffs, "transmit coefficient CSV")->required();
    de_cmd->add_option("--channel", e_channel, "channel matrix CSV")->required();
    de_cmd->add_option("--out", e_out, "received coefficient CSV")->required();

    // flow
    std::string f_t, f_s, f_m11, f_r, f_v, f_case = "corrected", f_outdir = ".";
    auto* flow_cmd = app.add_subcommand("flow", "solve the signal-flow model and an equivalent source");
    flow_cmd->add_option("--transmission", f_t, "T vector (coefficient CSV)")->required();
    flow_cmd->add_option("--scattering", f_s, "S matrix (channel CSV)")->required();
    flow_cmd->add_option("--m11", f_m11, "M11 matrix (channel CSV)")->required();
    flow_cmd->add_option("--receiving", f_r, "R vector (coefficient CSV, optional)");
    flow_cmd->add_option("--v", f_v, "port wave re,im (default 1,0)");
    flow_cmd->add_option("--case", f_case, "love | naive | corrected");
    flow_cmd->add_option("--out-dir", f_outdir, "directory for the result CSVs");

    // farfield
    std::string ff_coeffs, ff_out;
    double ff_dtheta = 1.0, ff_dphi = 1.0, ff_cut = 0.0;
    bool ff_dbi = false;
    auto* ff_cmd = app.add_subcommand("farfield", "superpose mode far fields from coefficients");
    ff_cmd->add_option("--coeffs", ff_coeffs, "coefficient CSV (kind bprime or b)")->required();
    ff_cmd->add_option("--dtheta", ff_dtheta, "theta step (deg)");
    ff_cmd->add_option("--dphi", ff_dphi, "phi step (deg)");
    auto* cut_opt = ff_cmd->add_option("--cut-phi-deg", ff_cut, "write a single phi cut");
    ff_cmd->add_flag("--dbi", ff_dbi, "write directivity (dBi) instead of complex fields");
    ff_cmd->add_option("--out", ff_out, "output far-field CSV")->required();

    // compare-ls
    std::string cl_out;
    int cl_nmax = 4;
    double cl_freq = speed_of_light;
    auto* cl_cmd = app.add_subcommand("compare-ls",
                                      "conditioning and accuracy report: orthogonality vs pseudo-inverse");
    cl_cmd->add_option("--nmax", cl_nmax, "truncation degree")->check(CLI::PositiveNumber);
    cl_cmd->add_option("--freq", cl_freq, "frequency (Hz)");
    cl_cmd->add_option("--out", cl_out, "output CSV")->required();

    // validate
    std::vector<int> v_criteria;
    auto* val_cmd = app.add_subcommand("validate", "run the built-in acceptance suite");
    val_cmd->add_option("--criterion", v_criteria, "criterion numbers to run (default: all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // help/version exit 0, usage errors exit 2
    }

    try {
        if (mesh_cmd->parsed()) return cmd_mesh(m_center, m_half, m_cells, m_rule, m_out);
        if (synth_cmd->parsed())
            return cmd_synth(s_box, s_cells, s_rule, s_freq, s_edip, s_mdip, s_coeffs, s_coeffs_a,
                             s_origin, s_out);
        if (dec_cmd->parsed()) return cmd_decompose(d_in, d_basis, d_nmax, d_origin, d_freq, d_out);
        if (de_cmd->parsed()) return cmd_deembed(e_coeffs, e_channel, e_out);
        if (flow_cmd->parsed())
            return cmd_flow(f_t, f_s, f_m11, f_r, f_v, f_case, f_outdir);
        if (ff_cmd->parsed())
            return cmd_farfield(ff_coeffs, ff_dtheta, ff_dphi, ff_cut, cut_opt->count() > 0, ff_dbi,
                                ff_out);
        if (cl_cmd->parsed()) return cmd_compare_ls(cl_nmax, cl_freq, cl_out);
        if (val_cmd->parsed()) {
            swfde::validation::Options opt;
            opt.criteria = v_criteria;
            opt.cli_path = argv[0];
            const auto results = swfde::validation::run_acceptance(opt, std::cout);
            for (const auto& r : results)
                if (!r.passed) return 1;
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const swfde::io_format_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
