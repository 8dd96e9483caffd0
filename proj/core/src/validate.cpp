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

#include "swfde/validate.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "swfde/decompose.hpp"
#include "swfde/io.hpp"
#include "swfde/parallel.hpp"
#include "swfde/sources.hpp"
#include "swfde/yee.hpp"

namespace swfde::validation {

namespace {

namespace fs = std::filesystem;

// Every experiment runs at f = c0, i.e. wavelength exactly 1 m, k = 2 pi.
const Medium kMed = Medium::free_space(speed_of_light);
constexpr double kLambda = 1.0;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

// ---------------------------------------------------------------------------
// Criterion 1: the nine-entry orthogonality table on a 1.0-wavelength cube
// with 64 x 64 nodes per face. The Gauss-Legendre per-face rule carries the
// gate (the integrand is analytic per face, so it converges far below the
// tolerance); the midpoint value at the same sample budget is reported next
// to it (it floors near 1e-4 / k^2, which is what FDTD-style dumps deliver).
// ---------------------------------------------------------------------------

double orthogonality_max_error(QuadratureRule rule) {
    const ModeSet ms(4);
    const std::size_t nm = static_cast<std::size_t>(ms.count());
    const SurfaceMesh mesh =
        build_box_mesh(BoxSpec::cube({0, 0, 0}, 0.5 * kLambda, 64), rule);
    const ModeBank bank(ms, kMed, {0, 0, 0});
    const WaveType kinds[3] = {WaveType::regular, WaveType::incoming, WaveType::outgoing};
    const double k = kMed.k;

    // ip[c][xi][j][J] accumulated block-wise over samples, combined in order.
    const std::size_t npairs = 9 * nm * nm;
    const std::size_t block = 2048;
    const std::size_t nblocks = block_count(mesh.size(), block);
    std::vector<cplx> partials(nblocks * npairs);

    parallel_blocks(mesh.size(), block, [&](std::size_t bi, std::size_t begin, std::size_t end) {
        ModeBank::Workspace ws;
        std::array<std::vector<ComplexVec3>, 3> V;
        for (auto& v : V) v.resize(nm);
        std::array<std::vector<ComplexVec3>, 3> CxN;  // cross(k conj(V[dual]), n) * w
        std::array<std::vector<ComplexVec3>, 3> DxN;  // cross(k V[dual], n) * w
        for (auto& v : CxN) v.resize(nm);
        for (auto& v : DxN) v.resize(nm);
        std::vector<cplx> acc(npairs, cplx{});
        for (std::size_t i = begin; i < end; ++i) {
            const auto& s = mesh.samples[i];
            for (int c = 0; c < 3; ++c) bank.eval(kinds[c], s.position, ws, V[c]);
            for (int c = 0; c < 3; ++c) {
                for (std::size_t m = 0; m < nm; ++m) {
                    const auto& dualv = V[c][static_cast<std::size_t>(
                        bank.dual_position(static_cast<int>(m)))];
                    CxN[c][m] = cross((k * s.weight) * dualv.conj(), s.normal);
                    DxN[c][m] = cross((k * s.weight) * dualv, s.normal);
                }
            }
            std::size_t pair = 0;
            for (int c = 0; c < 3; ++c) {
                for (int x = 0; x < 3; ++x) {
                    for (std::size_t j = 0; j < nm; ++j) {
                        const ComplexVec3& u = V[c][j];
                        const ComplexVec3& du = DxN[c][j];
                        for (std::size_t J = 0; J < nm; ++J, ++pair)
                            acc[pair] += dot(u, CxN[x][J]) - dot(V[x][J].conj(), du);
                    }
                }
            }
        }
        std::copy(acc.begin(), acc.end(), partials.begin() + static_cast<std::ptrdiff_t>(bi * npairs));
    });

    std::vector<cplx> ip(npairs, cplx{});
    for (std::size_t bi = 0; bi < nblocks; ++bi)
        for (std::size_t p = 0; p < npairs; ++p) ip[p] += partials[bi * npairs + p];

    const std::map<std::pair<int, int>, cplx> B{
        {{0, 0}, {0, 0}},  {{0, 1}, {0, -1}}, {{0, 2}, {0, 1}},
        {{1, 0}, {0, -1}}, {{1, 1}, {0, -2}}, {{1, 2}, {0, 0}},
        {{2, 0}, {0, 1}},  {{2, 1}, {0, 0}},  {{2, 2}, {0, 2}}};
    double max_err = 0.0;
    std::size_t pair = 0;
    for (int c = 0; c < 3; ++c)
        for (int x = 0; x < 3; ++x) {
            const cplx scale = B.at({c, x}) / (2.0 * k * k);
            for (std::size_t j = 0; j < nm; ++j)
                for (std::size_t J = 0; J < nm; ++J, ++pair) {
                    const cplx expected = (j == J) ? scale : cplx{};
                    max_err = std::max(max_err, std::abs(ip[pair] - expected));
                }
        }
    return max_err;
}

CriterionResult criterion1() {
    CriterionResult r{1, "orthogonality table (Eq. 3/4, 1.0-wavelength cube, 64x64 per face)", false, "", 0};
    const double tol = 1e-6 / (kMed.k * kMed.k);
    const double gauss = orthogonality_max_error(QuadratureRule::gauss_legendre);
    const double midpoint = orthogonality_max_error(QuadratureRule::midpoint);
    r.passed = gauss < tol;
    r.detail = "gauss max|err| = " + fmt(gauss * kMed.k * kMed.k) + "/k^2 (tol 1e-6/k^2); midpoint rule at same budget = " +
               fmt(midpoint * kMed.k * kMed.k) + "/k^2";
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 2: synthesis -> decomposition round trip with second-order
// quadrature convergence.
// ---------------------------------------------------------------------------

CoefficientSet random_coeffs(CoefficientKind kind, ModeSet ms, unsigned seed, double scale) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> d(0.0, 1.0);
    CoefficientSet out;
    out.kind = kind;
    out.modeset = ms;
    out.medium = kMed;
    out.values.resize(static_cast<std::size_t>(ms.count()));
    for (auto& v : out.values) v = scale * cplx{d(rng), d(rng)};
    return out;
}

FieldTrace synthesize_trace(const CoefficientSet& b, const CoefficientSet& a,
                            const SurfaceMesh& mesh) {
    std::vector<Vec3> pts(mesh.size());
    for (std::size_t i = 0; i < mesh.size(); ++i) pts[i] = mesh.samples[i].position;
    const auto eh = synthesize_from_coefficients(b, a, kMed, pts, {0, 0, 0});
    FieldTrace trace;
    trace.mesh = mesh;
    trace.frequency = kMed.frequency;
    trace.E.resize(mesh.size());
    trace.H.resize(mesh.size());
    for (std::size_t i = 0; i < mesh.size(); ++i) {
        trace.E[i] = eh[i].E;
        trace.H[i] = eh[i].H;
    }
    return trace;
}

double rel_err(const std::vector<cplx>& got, const std::vector<cplx>& want) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i) {
        num += std::norm(got[i] - want[i]);
        den += std::norm(want[i]);
    }
    return std::sqrt(num / den);
}

CriterionResult criterion2() {
    CriterionResult r{2, "round-trip decomposition (Eq. 5 and Eq. 14, order-2 convergence)", false, "", 0};
    const ModeSet ms(3);
    const CoefficientSet b = random_coeffs(CoefficientKind::outgoing, ms, 2024u, 1.0);
    const CoefficientSet a = random_coeffs(CoefficientKind::incoming, ms, 777u, 0.5);
    std::vector<cplx> b_minus_a(b.values);
    for (std::size_t i = 0; i < b_minus_a.size(); ++i) b_minus_a[i] -= a.values[i];

    double e5[2], e14[2];
    const int cells[2] = {64, 128};
    for (int s = 0; s < 2; ++s) {
        const SurfaceMesh mesh = build_box_mesh(BoxSpec::cube({0, 0, 0}, 0.5 * kLambda, cells[s]));
        const FieldTrace pure = synthesize_trace(b, {}, mesh);
        e5[s] = rel_err(decompose_outgoing(pure, ms, kMed, {0, 0, 0}).values, b.values);
        const FieldTrace mixed = synthesize_trace(b, a, mesh);
        e14[s] = rel_err(decompose_radiating(mixed, ms, kMed, {0, 0, 0}).values, b_minus_a);
    }
    const double ratio5 = e5[0] / e5[1];
    const double ratio14 = e14[0] / e14[1];
    r.passed = e5[0] < 1e-4 && ratio5 >= 3.5 && e14[0] < 1e-4 && ratio14 >= 3.5;
    r.detail = "Eq.5: err64 = " + fmt(e5[0]) + " (tol 1e-4), refine ratio " + fmt(ratio5) +
               " (need >= 3.5); Eq.14: err64 = " + fmt(e14[0]) + ", ratio " + fmt(ratio14);
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 3: case-3 equivalence holds to 1e-12; case 2 does not.
// ---------------------------------------------------------------------------

CriterionResult criterion3() {
    CriterionResult r{3, "Huygens equivalence in coefficient space (cases 2 and 3)", false, "", 0};
    const ModeSet ms(2);
    const int n = ms.count();
    std::mt19937 rng(99);
    std::normal_distribution<double> d(0.0, 1.0);
    std::uniform_real_distribution<double> normd(0.1, 0.85);

    double worst3 = 0.0;
    double min_case2 = 1e300;
    bool ok = true;
    for (int t = 0; t < 20; ++t) {
        Eigen::MatrixXcd G(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) G(i, j) = cplx{d(rng), d(rng)};
        const double target = normd(rng);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(G);
        ChannelMatrix m11{G * (target / svd.singularValues()(0)),
                          ChannelMatrix::Role::self_reflection};

        CoefficientSet b = random_coeffs(CoefficientKind::outgoing, ms, 1000u + static_cast<unsigned>(t), 1.0);
        const Eigen::VectorXcd a_vec = m11.entries * to_eigen(b);
        const CoefficientSet a = from_eigen(a_vec, CoefficientKind::incoming, ms, kMed);

        const auto [bp3, ap3] = equivalent_source(EquivalenceCase::outgoing_corrected, b, a);
        const auto sol3 = solve_equivalent_flow(bp3, ap3, m11);
        const double err3 =
            std::max(rel_err(sol3.b_hat.values, b.values), rel_err(sol3.a_hat.values, a.values));
        worst3 = std::max(worst3, err3);

        const auto [bp2, ap2] = equivalent_source(EquivalenceCase::naive_outgoing, b, a);
        const auto sol2 = solve_equivalent_flow(bp2, ap2, m11);
        const double mismatch2 = rel_err(sol2.b_hat.values, b.values);
        min_case2 = std::min(min_case2, mismatch2);
        if (err3 > 1e-12 || mismatch2 <= 1e-6) ok = false;
    }
    r.passed = ok;
    r.detail = "case 3 worst error = " + fmt(worst3) + " (tol 1e-12); case 2 smallest mismatch = " +
               fmt(min_case2) + " (must stay > 1e-6)";
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 4: interior/exterior source rejection.
// ---------------------------------------------------------------------------

CriterionResult criterion4() {
    CriterionResult r{4, "exterior-source rejection and interior purity", false, "", 0};
    const ModeSet ms(4);
    const SurfaceMesh mesh = build_box_mesh(BoxSpec::cube({0, 0, 0}, 0.5 * kLambda, 64));
    Scene interior{{DipoleSource{{0.0, 0.3 * kLambda, 0.0},
                                 {0.0, {1e-3, 0.0}, 0.0, VecBasis::cartesian},
                                 DipoleSource::Kind::electric}},
                   kMed};
    const FieldTrace tin = sample_scene_on_mesh(interior, mesh);
    const double a_over_b = decompose_incoming(tin, ms, kMed, {0, 0, 0}).norm() /
                            decompose_outgoing(tin, ms, kMed, {0, 0, 0}).norm();

    Scene exterior{{DipoleSource{{2.5 * kLambda, 0.0, 0.0},
                                 {0.0, {1e-3, 0.0}, 0.0, VecBasis::cartesian},
                                 DipoleSource::Kind::electric}},
                   kMed};
    const FieldTrace tout = sample_scene_on_mesh(exterior, mesh);
    const double bp_over_a = decompose_radiating(tout, ms, kMed, {0, 0, 0}).norm() /
                             decompose_incoming(tout, ms, kMed, {0, 0, 0}).norm();

    r.passed = a_over_b < 1e-3 && bp_over_a < 1e-3;
    r.detail = "interior |a|/|b| = " + fmt(a_over_b) + ", exterior |b'|/|a| = " + fmt(bp_over_a) +
               " (tol 1e-3 each)";
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 5: free-space far-field analog.
// ---------------------------------------------------------------------------

CriterionResult criterion5() {
    CriterionResult r{5, "far-field de-embedding analog (0.3-wavelength offset dipole)", false, "", 0};
    const SurfaceMesh mesh = build_box_mesh(BoxSpec::cube({0, 0, 0}, 0.5 * kLambda, 64));
    const DipoleSource dip{{0.0, 0.0, 0.3 * kLambda},
                           {0.0, {1e-3, 0.0}, 0.0, VecBasis::cartesian},
                           DipoleSource::Kind::electric};
    const FieldTrace trace = sample_scene_on_mesh(Scene{{dip}, kMed}, mesh);

    const FarFieldGrid cut = FarFieldGrid::phi_cut(0.0);
    // Exact reference: analytic dipole far field and closed-form power.
    const double p_exact = dipole_radiated_power(dip, kMed);
    std::vector<double> d_exact(cut.size());
    for (std::size_t i = 0; i < cut.size(); ++i) {
        const double th = cut.theta_deg[i] * pi / 180.0;
        const ComplexVec3 e = dipole_farfield(dip, kMed, th, 0.0);
        const double u = (std::norm(e.x) + std::norm(e.y) + std::norm(e.z)) /
                         (2.0 * kMed.eta * kMed.k * kMed.k);
        d_exact[i] = 10.0 * std::log10(4.0 * pi * u / p_exact);
    }

    std::vector<double> errs;
    int count48 = 0;
    std::array<int, 5> per_degree{};
    for (int n_max = 1; n_max <= 4; ++n_max) {
        const ModeSet ms(n_max);
        const CoefficientSet bp = decompose_radiating(trace, ms, kMed, {0, 0, 0});
        if (n_max == 4) {
            count48 = ms.count();
            for (int i = 0; i < ms.count(); ++i) per_degree[static_cast<std::size_t>(ms.at(i).n)]++;
        }
        const FarFieldPattern pat = superpose_farfields(bp, kMed, cut);
        const std::vector<double> d_swf = directivity(pat, radiated_power(bp));
        double worst = 0.0;
        for (std::size_t i = 0; i < cut.size(); ++i)
            worst = std::max(worst, std::abs(d_swf[i] - d_exact[i]));
        errs.push_back(worst);
    }
    const bool leg_a = errs[3] < 0.1;
    const bool leg_b = errs[0] > errs[1] && errs[1] > errs[2] && errs[2] > errs[3];
    const bool leg_c = errs[0] < 1.0;  // not attainable at this offset; kept as specified
    const bool leg_d = count48 == 48 && per_degree[1] == 6 && per_degree[2] == 10 &&
                       per_degree[3] == 14 && per_degree[4] == 18;

    // Sanity: centered z-dipole peaks at 1.76 dBi.
    const DipoleSource zdip{{0, 0, 0}, {0.0, 0.0, {1e-3, 0.0}, VecBasis::cartesian},
                            DipoleSource::Kind::electric};
    const FieldTrace ztrace = sample_scene_on_mesh(Scene{{zdip}, kMed}, mesh);
    const CoefficientSet zb = decompose_radiating(ztrace, ModeSet(4), kMed, {0, 0, 0});
    const FarFieldPattern zpat = superpose_farfields(zb, kMed, cut);
    const std::vector<double> zd = directivity(zpat, radiated_power(zb));
    double zpeak = -1e300;
    std::size_t zarg = 0;
    for (std::size_t i = 0; i < zd.size(); ++i)
        if (zd[i] > zpeak) {
            zpeak = zd[i];
            zarg = i;
        }
    const bool leg_e = std::abs(zpeak - 1.76) <= 0.01 && std::abs(cut.theta_deg[zarg] - 90.0) < 1.5;

    r.passed = leg_a && leg_b && leg_c && leg_d && leg_e;
    r.detail = "max|dD| per n_max 1..4 = [" + fmt(errs[0]) + ", " + fmt(errs[1]) + ", " +
               fmt(errs[2]) + ", " + fmt(errs[3]) + "] dB; n_max=4 < 0.1 dB: " +
               (leg_a ? "yes" : "NO") + "; monotone: " + (leg_b ? "yes" : "NO") +
               "; n_max=1 within 1 dB: " + (leg_c ? "yes" : "NO (not attainable at 0.3-wavelength offset; 41% of the power sits in degrees >= 2)") +
               "; 48 = 6+10+14+18 modes: " + (leg_d ? "yes" : "NO") +
               "; z-dipole peak " + fmt(zpeak) + " dBi at theta " + fmt(cut.theta_deg[zarg]) +
               " deg: " + (leg_e ? "yes" : "NO");
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 6: least-squares baseline and conditioning.
// ---------------------------------------------------------------------------

CriterionResult criterion6() {
    CriterionResult r{6, "pseudo-inverse baseline vs orthogonality, conditioning growth", false, "", 0};
    const ModeSet ms(3);
    const CoefficientSet b = random_coeffs(CoefficientKind::outgoing, ms, 4242u, 1.0);
    const SurfaceMesh mesh = build_box_mesh(BoxSpec::cube({0, 0, 0}, 0.5 * kLambda, 48),
                                            QuadratureRule::gauss_legendre);
    const FieldTrace trace = synthesize_trace(b, {}, mesh);
    const WaveType out_basis[1] = {WaveType::outgoing};
    const auto ls = decompose_leastsquares(trace, ms, kMed, {0, 0, 0}, out_basis);
    const CoefficientSet orth = decompose_outgoing(trace, ms, kMed, {0, 0, 0});
    const double agree = rel_err(ls.coefficients[0].values, orth.values);

    // Conditioning of the regular vs outgoing basis across shrinking boxes;
    // hard assertion only on monotone growth once kr_max < 0.2.
    const ModeSet ms4(4);
    std::ostringstream cmp;
    bool monotone = true;
    for (WaveType wt : {WaveType::regular, WaveType::outgoing}) {
        const WaveType basis[1] = {wt};
        double prev = 0.0;
        cmp << (wt == WaveType::regular ? " F1 conds:" : " F4 conds:");
        for (double half : {0.010 * kLambda, 0.007 * kLambda, 0.004 * kLambda}) {
            const SurfaceMesh small = build_box_mesh(BoxSpec::cube({0, 0, 0}, half, 16));
            const auto rep = condition_report(small, ms4, kMed, {0, 0, 0}, basis);
            cmp << ' ' << fmt(rep.condition_number);
            if (rep.condition_number <= prev) monotone = false;
            prev = rep.condition_number;
        }
    }
    r.passed = agree < 1e-6 && monotone && ls.coefficients[0].values.size() == b.values.size();
    r.detail = "LS vs orthogonality rel err = " + fmt(agree) +
               " (tol 1e-6); shrinking-box conditioning monotone: " + (monotone ? "yes" : "NO") +
               ";" + cmp.str();
    return r;
}

// ---------------------------------------------------------------------------
// Criterion 7: file formats, CLI pipeline equivalence, Yee colocation order.
// ---------------------------------------------------------------------------

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run_cmd(const std::string& cmd) {
    return std::system((cmd + " >/dev/null 2>&1").c_str());
}

double yee_error(double delta) {
    // Plane wave along an oblique direction, patch in the x-y plane.
    const Vec3 khat = Vec3{1.0, 2.0, 3.0}.normalized();
    const Vec3 e0 = khat.cross(Vec3{0.0, 0.0, 1.0}).normalized();
    const Vec3 h0 = khat.cross(e0);
    const double dt = 0.01 / kMed.frequency;
    const double w_half = 2.0 * pi * kMed.frequency * dt / 2.0;
    const cplx lag{std::cos(w_half), -std::sin(w_half)};  // recorded H lags by dt/2

    auto plane_e = [&](Vec3 p) {
        const cplx ph = std::exp(cplx{0.0, -kMed.k * khat.dot(p)});
        return ComplexVec3{ph * e0.x, ph * e0.y, ph * e0.z, VecBasis::cartesian};
    };
    auto plane_h = [&](Vec3 p) {
        const cplx ph = std::exp(cplx{0.0, -kMed.k * khat.dot(p)}) / kMed.eta;
        return ComplexVec3{ph * h0.x, ph * h0.y, ph * h0.z, VecBasis::cartesian};
    };

    YeeSurfacePatch patch;
    patch.origin = {0.1, -0.05, 0.2};
    patch.tangent1 = {1, 0, 0};
    patch.tangent2 = {0, 1, 0};
    patch.normal = {0, 0, 1};
    patch.n1 = 8;
    patch.n2 = 8;
    for (int comp = 0; comp < 3; ++comp) {
        patch.E[static_cast<std::size_t>(comp)].resize(64);
        auto& sc = patch.H[static_cast<std::size_t>(comp)];
        sc.stagger_axis = comp % 2;
        sc.values.resize(sc.stagger_axis == 0 ? 9 * 8 : 8 * 9);
    }
    for (int i1 = 0; i1 < 8; ++i1)
        for (int i2 = 0; i2 < 8; ++i2) {
            const Vec3 p = patch.origin + (delta * i1) * patch.tangent1 + (delta * i2) * patch.tangent2;
            const ComplexVec3 e = plane_e(p);
            const std::size_t site = static_cast<std::size_t>(i1) * 8 + static_cast<std::size_t>(i2);
            patch.E[0][site] = e.x;
            patch.E[1][site] = e.y;
            patch.E[2][site] = e.z;
        }
    for (int comp = 0; comp < 3; ++comp) {
        auto& sc = patch.H[static_cast<std::size_t>(comp)];
        const int m1 = sc.stagger_axis == 0 ? 9 : 8;
        const int m2 = sc.stagger_axis == 0 ? 8 : 9;
        for (int i1 = 0; i1 < m1; ++i1)
            for (int i2 = 0; i2 < m2; ++i2) {
                const double o1 = sc.stagger_axis == 0 ? i1 - 0.5 : i1;
                const double o2 = sc.stagger_axis == 1 ? i2 - 0.5 : i2;
                const Vec3 p = patch.origin + (delta * o1) * patch.tangent1 + (delta * o2) * patch.tangent2;
                const ComplexVec3 h = plane_h(p);
                const cplx val = (comp == 0 ? h.x : comp == 1 ? h.y : h.z) * lag;
                sc.values[static_cast<std::size_t>(i1) * static_cast<std::size_t>(m2) +
                          static_cast<std::size_t>(i2)] = val;
            }
    }
    const YeeSurfacePatch patches[1] = {patch};
    const FieldTrace trace = colocate_yee(patches, delta, dt, kMed.frequency);
    double worst = 0.0;
    for (std::size_t i = 0; i < trace.mesh.size(); ++i) {
        const ComplexVec3 want = plane_h(trace.mesh.samples[i].position);
        worst = std::max(worst, (trace.H[i] - want).norm() / want.norm());
    }
    return worst;
}

CriterionResult criterion7(const std::string& cli) {
    CriterionResult r{7, "file round trips, CLI pipeline equivalence, Yee colocation order", false, "", 0};

    const fs::path dir = fs::temp_directory_path() / ("swfde_validate_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir);
    bool io_ok = true;
    std::ostringstream note;

    // NFD bitwise round trip with extra header keys.
    const SurfaceMesh mesh = build_box_mesh(BoxSpec::cube({0, 0, 0}, 0.25, 4));
    const DipoleSource dip{{0.0, 0.05, 0.02}, {0.0, {1e-3, 0.0}, 0.0, VecBasis::cartesian},
                           DipoleSource::Kind::electric};
    NfdFile nfd;
    nfd.trace = sample_scene_on_mesh(Scene{{dip}, kMed}, mesh);
    nfd.provenance = BoxSpec::cube({0, 0, 0}, 0.25, 4);
    nfd.extra_keys = {{"solver", "unit-fixture"}, {"note", "forward compatible"}};
    write_nfd(dir / "trace.nfd", nfd);
    const NfdFile back = read_nfd(dir / "trace.nfd");
    if (back.extra_keys != nfd.extra_keys) io_ok = false;
    for (std::size_t i = 0; i < mesh.size() && io_ok; ++i)
        if (std::memcmp(&back.trace.E[i].x, &nfd.trace.E[i].x, sizeof(cplx)) != 0 ||
            back.trace.mesh.samples[i].weight != nfd.trace.mesh.samples[i].weight)
            io_ok = false;

    // Coefficient + channel CSV round trips.
    const CoefficientSet bp = decompose_radiating(nfd.trace, ModeSet(2), kMed, {0, 0, 0});
    write_coefficients(dir / "c.csv", bp);
    const CoefficientSet bp2 = read_coefficients(dir / "c.csv");
    if (bp2.values != bp.values || bp2.kind != bp.kind) io_ok = false;
    {
        std::mt19937 rng(5);
        std::normal_distribution<double> d(0.0, 1.0);
        ChannelMatrix m{Eigen::MatrixXcd(16, 16), ChannelMatrix::Role::full};
        for (int i = 0; i < 16; ++i)
            for (int j = 0; j < 16; ++j) m.entries(i, j) = cplx{d(rng), d(rng)};
        write_channel_matrix(dir / "m.csv", m);
        const ChannelMatrix m2 = read_channel_matrix(dir / "m.csv");
        if (m2.entries != m.entries || m2.role != m.role) io_ok = false;
    }
    note << "file round trips " << (io_ok ? "bit-exact" : "FAILED");

    // CLI pipeline vs library, byte-for-byte.
    bool cli_ok = true;
    if (!cli.empty()) {
        const std::string freq = format_double(kMed.frequency);
        const std::string synth = cli + " synth --box 0,0,0,0.5,0.5,0.5 --cells 16 --freq " + freq +
                                  " --electric-dipole 0,0,0.25,0,0,0.001,0,0,0 --out " +
                                  (dir / "cli.nfd").string();
        const std::string decomp = cli + " decompose --in " + (dir / "cli.nfd").string() +
                                   " --basis bprime --nmax 3 --origin 0,0,0 --out " +
                                   (dir / "cli.csv").string();
        const std::string ff = cli + " farfield --coeffs " + (dir / "cli.csv").string() +
                               " --cut-phi-deg 0 --out " + (dir / "cli_ff.csv").string();
        cli_ok = run_cmd(synth) == 0 && run_cmd(decomp) == 0 && run_cmd(ff) == 0;
        if (cli_ok) {
            // Same pipeline through the library.
            const SurfaceMesh m2 = build_box_mesh(BoxSpec::cube({0, 0, 0}, 0.5, 16));
            const DipoleSource d2{{0.0, 0.0, 0.25}, {0.0, 0.0, {0.001, 0.0}, VecBasis::cartesian},
                                  DipoleSource::Kind::electric};
            NfdFile lib;
            lib.trace = sample_scene_on_mesh(Scene{{d2}, kMed}, m2);
            lib.provenance = BoxSpec::cube({0, 0, 0}, 0.5, 16);
            write_nfd(dir / "lib.nfd", lib);
            const CoefficientSet c2 = decompose_radiating(lib.trace, ModeSet(3), kMed, {0, 0, 0});
            write_coefficients(dir / "lib.csv", c2);
            const FarFieldPattern p2 = superpose_farfields(c2, kMed, FarFieldGrid::phi_cut(0.0));
            write_farfield(dir / "lib_ff.csv", p2);
            cli_ok = read_file(dir / "cli.nfd") == read_file(dir / "lib.nfd") &&
                     read_file(dir / "cli.csv") == read_file(dir / "lib.csv") &&
                     read_file(dir / "cli_ff.csv") == read_file(dir / "lib_ff.csv");
        }
        note << "; cli pipeline " << (cli_ok ? "bit-identical" : "FAILED");
    } else {
        note << "; cli pipeline skipped (no binary path)";
    }

    // Yee colocation convergence order.
    const double e1 = yee_error(0.02), e2 = yee_error(0.01);
    const double order = std::log2(e1 / e2);
    const bool yee_ok = order >= 1.9;
    note << "; yee order = " << fmt(order) << " (need >= 1.9)";

    fs::remove_all(dir);
    r.passed = io_ok && cli_ok && yee_ok;
    r.detail = note.str();
    return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const Options& opt, std::ostream& out) {
    std::vector<int> which = opt.criteria;
    if (which.empty()) which = {1, 2, 3, 4, 5, 6, 7};

    std::vector<CriterionResult> results;
    for (int c : which) {
        const auto t0 = std::chrono::steady_clock::now();
        CriterionResult r;
        switch (c) {
            case 1: r = criterion1(); break;
            case 2: r = criterion2(); break;
            case 3: r = criterion3(); break;
            case 4: r = criterion4(); break;
            case 5: r = criterion5(); break;
            case 6: r = criterion6(); break;
            case 7: r = criterion7(opt.cli_path); break;
            default: throw std::domain_error("unknown acceptance criterion " + std::to_string(c));
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out << (r.passed ? "[PASS] " : "[FAIL] ") << "criterion " << r.number << ": " << r.name
            << " -- " << r.detail << " [" << fmt(r.seconds) << " s]" << std::endl;
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace swfde::validation
