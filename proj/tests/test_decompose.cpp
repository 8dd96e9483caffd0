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

#include "doctest.h"
#include "swfde/decompose.hpp"
#include "swfde/sources.hpp"
#include "test_helpers.hpp"

#include <cmath>
#include <random>

using namespace swfde;
using namespace swfde_test;

namespace {

const Medium med = Medium::free_space(speed_of_light);  // wavelength exactly 1 m
constexpr double lam = 1.0;

FieldTrace trace_from_coeffs(const CoefficientSet& b, const CoefficientSet& a,
                             const SurfaceMesh& mesh, Vec3 origin = {}) {
    std::vector<Vec3> pts(mesh.size());
    for (std::size_t i = 0; i < mesh.size(); ++i) pts[i] = mesh.samples[i].position;
    const auto eh = synthesize_from_coefficients(b, a, med, pts, origin);
    FieldTrace t;
    t.mesh = mesh;
    t.frequency = med.frequency;
    t.E.resize(mesh.size());
    t.H.resize(mesh.size());
    for (std::size_t i = 0; i < mesh.size(); ++i) {
        t.E[i] = eh[i].E;
        t.H[i] = eh[i].H;
    }
    return t;
}

CoefficientSet unit_coeff(CoefficientKind kind, ModeSet ms, int j) {
    CoefficientSet c{kind, std::vector<cplx>(static_cast<std::size_t>(ms.count()), cplx{}), ms, med};
    c.values[static_cast<std::size_t>(j - 1)] = 1.0;
    return c;
}

CoefficientSet random_coeffs(CoefficientKind kind, ModeSet ms, unsigned seed, double scale = 1.0) {
    std::mt19937 rng(seed);
    CoefficientSet c{kind, {}, ms, med};
    for (int i = 0; i < ms.count(); ++i) c.values.push_back(scale * random_cplx(rng));
    return c;
}

double rel_err(const std::vector<cplx>& got, const std::vector<cplx>& want) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i) {
        num += std::norm(got[i] - want[i]);
        den += std::norm(want[i]);
    }
    return std::sqrt(num / den);
}

const SurfaceMesh gauss_mesh = build_box_mesh(BoxSpec::cube({0, 0, 0}, 0.5 * lam, 24),
                                              QuadratureRule::gauss_legendre);

}  // namespace

TEST_CASE("single-mode inner products reproduce the table entries") {
    // Trace synthesized as E = k sqrt(eta) F_5^{(4)}: the outgoing projection
    // gives k sqrt(eta) * j/k^2, the incoming one vanishes.
    const ModeSet ms(2);
    const FieldTrace t = trace_from_coeffs(unit_coeff(CoefficientKind::outgoing, ms, 5), {}, gauss_mesh);
    const cplx got4 = inner_product_field_mode(t, smn_from_j(5), WaveType::outgoing, med, {});
    const cplx want4 = med.k * std::sqrt(med.eta) * cplx{0.0, 1.0} / (med.k * med.k);
    CHECK(std::abs(got4 - want4) <= 1e-10 * std::abs(want4));
    const cplx got3 = inner_product_field_mode(t, smn_from_j(5), WaveType::incoming, med, {});
    CHECK(std::abs(got3) <= 1e-10 * std::abs(want4));
    // cross mode
    const cplx cross_term = inner_product_field_mode(t, smn_from_j(7), WaveType::outgoing, med, {});
    CHECK(std::abs(cross_term) <= 1e-10 * std::abs(want4));
}

TEST_CASE("zero trace decomposes to exact zeros") {
    FieldTrace t;
    t.mesh = build_box_mesh(BoxSpec::cube({0, 0, 0}, 0.5, 4));
    t.frequency = med.frequency;
    t.E.assign(t.mesh.size(), ComplexVec3{});
    t.H.assign(t.mesh.size(), ComplexVec3{});
    for (const cplx& v : decompose_outgoing(t, ModeSet(2), med, {}).values) CHECK(v == cplx{});
    for (const cplx& v : decompose_incoming(t, ModeSet(2), med, {}).values) CHECK(v == cplx{});
    for (const cplx& v : decompose_radiating(t, ModeSet(2), med, {}).values) CHECK(v == cplx{});
}

TEST_CASE("round trip on a synthesized unit vector") {
    const ModeSet ms(3);
    const SurfaceMesh mesh = build_box_mesh(BoxSpec::cube({0, 0, 0}, 0.5 * lam, 64));
    const CoefficientSet b = unit_coeff(CoefficientKind::outgoing, ms, 5);
    const FieldTrace t = trace_from_coeffs(b, {}, mesh);
    const CoefficientSet rec = decompose_outgoing(t, ms, med, {});
    CHECK(rel_err(rec.values, b.values) < 1e-4);
    CHECK(rec.kind == CoefficientKind::outgoing);
}

TEST_CASE("a purely regular field splits evenly into b and a") {
    // c_j F^{(1)} = (c_j/2)(F^{(3)} + F^{(4)}): both projections return c/2.
    const ModeSet ms(2);
    const CoefficientSet c = random_coeffs(CoefficientKind::outgoing, ms, 21u);
    CoefficientSet half = c;
    half.kind = CoefficientKind::incoming;
    const FieldTrace t = trace_from_coeffs(c, half, med.frequency > 0 ? gauss_mesh : gauss_mesh);
    // synthesizing b = a = c gives E = k sqrt(eta) sum c_j (F4 + F3) = 2 c_j F1
    const CoefficientSet b = decompose_outgoing(t, ms, med, {});
    const CoefficientSet a = decompose_incoming(t, ms, med, {});
    CHECK(rel_err(b.values, c.values) < 1e-10);
    CHECK(rel_err(a.values, c.values) < 1e-10);
    // and the radiating projection of a regular field vanishes
    const CoefficientSet bp = decompose_radiating(t, ms, med, {});
    CHECK(bp.norm() <= 1e-10 * c.norm());
}

TEST_CASE("decomposition is complex-linear in the trace") {
    const ModeSet ms(2);
    const SurfaceMesh mesh = build_box_mesh(BoxSpec::cube({0, 0, 0}, 0.5 * lam, 12));
    const CoefficientSet b1 = random_coeffs(CoefficientKind::outgoing, ms, 31u);
    const CoefficientSet b2 = random_coeffs(CoefficientKind::outgoing, ms, 32u);
    FieldTrace t1 = trace_from_coeffs(b1, {}, mesh);
    const FieldTrace t2 = trace_from_coeffs(b2, {}, mesh);
    const cplx alpha{0.7, -1.3};
    FieldTrace t12 = t1;
    for (std::size_t i = 0; i < mesh.size(); ++i) {
        t12.E[i] = alpha * t1.E[i] + t2.E[i];
        t12.H[i] = alpha * t1.H[i] + t2.H[i];
    }
    const auto d1 = decompose_outgoing(t1, ms, med, {});
    const auto d2 = decompose_outgoing(t2, ms, med, {});
    const auto d12 = decompose_outgoing(t12, ms, med, {});
    for (std::size_t i = 0; i < d12.values.size(); ++i)
        CHECK(std::abs(d12.values[i] - (alpha * d1.values[i] + d2.values[i])) <=
              1e-12 * d12.norm());
}

TEST_CASE("consistency triangle b' = b - a on random mixed traces") {
    const ModeSet ms(3);
    const SurfaceMesh mesh = build_box_mesh(BoxSpec::cube({0, 0, 0}, 0.5 * lam, 16));
    for (unsigned seed = 0; seed < 20; ++seed) {
        const CoefficientSet b = random_coeffs(CoefficientKind::outgoing, ms, 100 + seed);
        const CoefficientSet a = random_coeffs(CoefficientKind::incoming, ms, 200 + seed, 0.6);
        const FieldTrace t = trace_from_coeffs(b, a, mesh);
        const auto db = decompose_outgoing(t, ms, med, {});
        const auto da = decompose_incoming(t, ms, med, {});
        const auto dbp = decompose_radiating(t, ms, med, {});
        std::vector<cplx> diff(db.values.size());
        for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = db.values[i] - da.values[i];
        CHECK(rel_err(dbp.values, diff) < 1e-10);
        CHECK(dbp.kind == CoefficientKind::radiating);
    }
}

TEST_CASE("interior source: no incoming content") {
    const ModeSet ms(4);
    const SurfaceMesh mesh = build_box_mesh(BoxSpec::cube({0, 0, 0}, 0.5 * lam, 32));
    const Scene scene{{DipoleSource{{0.0, 0.3 * lam, 0.0},
                                    {0.0, {1e-3, 0.0}, 0.0, VecBasis::cartesian},
                                    DipoleSource::Kind::electric}},
                      med};
    const FieldTrace t = sample_scene_on_mesh(scene, mesh);
    const double ratio = decompose_incoming(t, ms, med, {}).norm() /
                         decompose_outgoing(t, ms, med, {}).norm();
    CHECK(ratio < 1e-3);
}

TEST_CASE("exterior source: b' rejected, b equals a") {
    const ModeSet ms(4);
    const SurfaceMesh mesh = build_box_mesh(BoxSpec::cube({0, 0, 0}, 0.5 * lam, 32));
    const Scene scene{{DipoleSource{{2.5 * lam, 0.0, 0.0},
                                    {0.0, {1e-3, 0.0}, 0.0, VecBasis::cartesian},
                                    DipoleSource::Kind::electric}},
                      med};
    const FieldTrace t = sample_scene_on_mesh(scene, mesh);
    const double bp = decompose_radiating(t, ms, med, {}).norm();
    const double a = decompose_incoming(t, ms, med, {}).norm();
    CHECK(bp < 1e-3 * a);
}

TEST_CASE("quadrature error drops at second order between 32^2 and 64^2") {
    const ModeSet ms(3);
    const CoefficientSet b = random_coeffs(CoefficientKind::outgoing, ms, 55u);
    double errs[2];
    const int cells[2] = {32, 64};
    for (int s = 0; s < 2; ++s) {
        const SurfaceMesh mesh = build_box_mesh(BoxSpec::cube({0, 0, 0}, 0.5 * lam, cells[s]));
        const FieldTrace t = trace_from_coeffs(b, {}, mesh);
        errs[s] = rel_err(decompose_outgoing(t, ms, med, {}).values, b.values);
    }
    const double order = std::log2(errs[0] / errs[1]);
    CHECK(order >= 1.9);
}

TEST_CASE("two different boxes around the same source agree") {
    const ModeSet ms(3);
    const DipoleSource dip{{0.1 * lam, 0.05 * lam, -0.08 * lam},
                           {{1e-3, 2e-4}, {0.0, -4e-4}, {5e-4, 0.0}, VecBasis::cartesian},
                           DipoleSource::Kind::electric};
    BoxSpec other;
    other.center = {0.05 * lam, 0.0, 0.0};
    other.half_extents = {0.65 * lam, 0.45 * lam, 0.55 * lam};
    other.cells_per_face = {{{64, 64}, {64, 64}, {64, 64}}};
    const FieldTrace t1 = sample_scene_on_mesh(Scene{{dip}, med},
                                               build_box_mesh(BoxSpec::cube({0, 0, 0}, 0.5 * lam, 64)));
    const FieldTrace t2 = sample_scene_on_mesh(Scene{{dip}, med}, build_box_mesh(other));
    const auto b1 = decompose_radiating(t1, ms, med, {});
    const auto b2 = decompose_radiating(t2, ms, med, {});
    CHECK(rel_err(b1.values, b2.values) < 1e-3);
}

TEST_CASE("preconditions: origin enclosure and frequency match") {
    const ModeSet ms(1);
    const SurfaceMesh mesh = build_box_mesh(BoxSpec::cube({0, 0, 0}, 0.4, 8));
    FieldTrace t = trace_from_coeffs(random_coeffs(CoefficientKind::outgoing, ms, 61u), {}, mesh);
    CHECK_THROWS_AS(decompose_outgoing(t, ms, med, {5.0, 0.0, 0.0}), std::domain_error);
    t.frequency = med.frequency * 1.5;
    CHECK_THROWS_AS(decompose_outgoing(t, ms, med, {}), std::domain_error);
    t.frequency = med.frequency;
    t.E.pop_back();
    CHECK_THROWS_AS(decompose_outgoing(t, ms, med, {}), std::domain_error);
}

TEST_CASE("least squares agrees with the orthogonality route on clean traces") {
    const ModeSet ms(3);
    const CoefficientSet b = random_coeffs(CoefficientKind::outgoing, ms, 71u);
    const FieldTrace t = trace_from_coeffs(b, {}, gauss_mesh);
    const WaveType basis[1] = {WaveType::outgoing};
    const auto ls = decompose_leastsquares(t, ms, med, {}, basis);
    const auto orth = decompose_outgoing(t, ms, med, {});
    CHECK(rel_err(ls.coefficients[0].values, orth.values) < 1e-6);
    CHECK(ls.relative_residual < 1e-10);
    CHECK_FALSE(ls.rank_deficient);
}

TEST_CASE("least squares over both traveling bases separates b from a") {
    const ModeSet ms(2);
    const CoefficientSet b = random_coeffs(CoefficientKind::outgoing, ms, 81u);
    const FieldTrace t = trace_from_coeffs(b, {}, gauss_mesh);  // interior-source analog: a = 0
    const WaveType basis[2] = {WaveType::outgoing, WaveType::incoming};
    const auto ls = decompose_leastsquares(t, ms, med, {}, basis);
    REQUIRE(ls.coefficients.size() == 2);
    CHECK(rel_err(ls.coefficients[0].values, b.values) < 1e-8);
    CHECK(ls.coefficients[1].norm() <= 1e-8 * b.norm());
}

TEST_CASE("least squares on a zero trace returns zeros with zero residual") {
    FieldTrace t;
    t.mesh = build_box_mesh(BoxSpec::cube({0, 0, 0}, 0.4, 6));
    t.frequency = med.frequency;
    t.E.assign(t.mesh.size(), ComplexVec3{});
    t.H.assign(t.mesh.size(), ComplexVec3{});
    const WaveType basis[1] = {WaveType::outgoing};
    const auto ls = decompose_leastsquares(t, ModeSet(1), med, {}, basis);
    CHECK(ls.relative_residual == 0.0);
    for (const cplx& v : ls.coefficients[0].values) CHECK(std::abs(v) < 1e-12);
}

TEST_CASE("underdetermined systems are rejected up front") {
    FieldTrace t;
    t.mesh = build_box_mesh(BoxSpec::cube({0, 0, 0}, 0.4, 2));  // 24 samples -> 48 rows
    t.frequency = med.frequency;
    t.E.assign(t.mesh.size(), ComplexVec3{});
    t.H.assign(t.mesh.size(), ComplexVec3{});
    const WaveType basis[2] = {WaveType::outgoing, WaveType::incoming};  // 2*48 unknowns at n=4
    CHECK_THROWS_AS(decompose_leastsquares(t, ModeSet(4), med, {}, basis), std::domain_error);
}

TEST_CASE("condition reports: sane floor and growth on shrinking boxes") {
    const ModeSet ms(4);
    const WaveType regular[1] = {WaveType::regular};
    const WaveType outgoing[1] = {WaveType::outgoing};
    double prev_cond[2] = {0.0, 0.0};
    for (double half : {0.010 * lam, 0.007 * lam, 0.004 * lam}) {
        const SurfaceMesh mesh = build_box_mesh(BoxSpec::cube({0, 0, 0}, half, 16));
        const auto rep1 = condition_report(mesh, ms, med, {}, regular);
        const auto rep4 = condition_report(mesh, ms, med, {}, outgoing);
        CHECK(rep1.condition_number >= 1.0);
        CHECK(rep4.condition_number >= 1.0);
        CHECK(rep1.condition_number > prev_cond[0]);
        CHECK(rep4.condition_number > prev_cond[1]);
        CHECK(rep1.singular_values.size() == static_cast<std::size_t>(ms.count()));
        prev_cond[0] = rep1.condition_number;
        prev_cond[1] = rep4.condition_number;
    }
}
