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
#include "swfde/swf.hpp"
#include "test_helpers.hpp"

#include <cmath>
#include <map>
#include <random>

using namespace swfde;
using namespace swfde_test;

namespace {

const Medium med = Medium::free_space(1e9);

ComplexVec3 eval_cart(WaveType c, ModeIndex mode, Vec3 p) {
    const Vec3 d = p;
    const double theta = std::acos(d.z / d.norm());
    const double phi = std::atan2(d.y, d.x);
    return spherical_to_cartesian(eval_F(c, mode, med, p, {}), theta, phi);
}

}  // namespace

TEST_CASE("regular wave equals the mean of the traveling waves") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> rad(0.3, 3.0);
    const double lam = 2.0 * pi / med.k;
    for (int t = 0; t < 200; ++t) {
        const Vec3 p = rad(rng) * lam * random_direction(rng);
        for (int j = 1; j <= 48; ++j) {
            const ModeIndex mode = smn_from_j(j);
            const ComplexVec3 f1 = eval_F(WaveType::regular, mode, med, p, {});
            const ComplexVec3 f3 = eval_F(WaveType::incoming, mode, med, p, {});
            const ComplexVec3 f4 = eval_F(WaveType::outgoing, mode, med, p, {});
            const ComplexVec3 mean = 0.5 * (f3 + f4);
            CHECK((f1 - mean).norm() <= 1e-12 * std::max(f1.norm(), 1e-30));
        }
    }
}

TEST_CASE("curl identity against a finite-difference curl") {
    std::mt19937 rng(11);
    const double lam = 2.0 * pi / med.k;
    const double h = 1e-4 * lam;
    for (int t = 0; t < 5; ++t) {
        const Vec3 p = (3.0 / med.k) * random_direction(rng);  // kr ~ 3
        for (int j : {1, 2, 7, 16, 30, 48}) {
            const ModeIndex mode = smn_from_j(j);
            for (WaveType c : {WaveType::regular, WaveType::outgoing}) {
                auto at = [&](Vec3 q) { return eval_cart(c, mode, q); };
                auto fd_curl = [&](Vec3 q, double step) {
                    const double inv = 1.0 / (2 * step);
                    const ComplexVec3 dx = inv * (at(q + Vec3{step, 0, 0}) - at(q - Vec3{step, 0, 0}));
                    const ComplexVec3 dy = inv * (at(q + Vec3{0, step, 0}) - at(q - Vec3{0, step, 0}));
                    const ComplexVec3 dz = inv * (at(q + Vec3{0, 0, step}) - at(q - Vec3{0, 0, step}));
                    return ComplexVec3{dy.z - dz.y, dz.x - dx.z, dx.y - dy.x, VecBasis::cartesian};
                };
                // Richardson-extrapolated central differences: the plain
                // second-order truncation at this step is ~1e-6 itself for
                // the n = 4 modes, right at the assertion level.
                const ComplexVec3 c1 = fd_curl(p, h), c2 = fd_curl(p, h / 2);
                const ComplexVec3 num = (1.0 / 3.0) * (4.0 * c2 - c1);
                const double theta = std::acos(p.z / p.norm());
                const double phi = std::atan2(p.y, p.x);
                const ComplexVec3 ana = spherical_to_cartesian(eval_curl_F(c, mode, med, p, {}), theta, phi);
                CHECK((num - ana).norm() <= 1e-6 * ana.norm());
            }
        }
    }
}

TEST_CASE("applying the curl relation twice returns k^2 F") {
    const Vec3 p{0.21, -0.13, 0.33};
    for (int j : {3, 10, 25}) {
        const ModeIndex mode = smn_from_j(j);
        const ComplexVec3 once = eval_curl_F(WaveType::outgoing, mode, med, p, {});
        const ComplexVec3 twice = med.k * eval_curl_F(WaveType::outgoing, mode.dual(), med, p, {});
        const ComplexVec3 direct = (med.k * med.k) * eval_F(WaveType::outgoing, mode, med, p, {});
        CHECK((twice - direct).norm() <= 1e-12 * direct.norm());
        CHECK(once.basis == VecBasis::spherical);
    }
}

TEST_CASE("numerical divergence vanishes") {
    std::mt19937 rng(13);
    const double lam = 2.0 * pi / med.k;
    const double h = 1e-4 * lam;
    const Vec3 p = (2.5 / med.k) * random_direction(rng);
    for (int j : {1, 6, 20, 41}) {
        const ModeIndex mode = smn_from_j(j);
        auto at = [&](Vec3 q) { return eval_cart(WaveType::outgoing, mode, q); };
        const cplx div = (at(p + Vec3{h, 0, 0}).x - at(p - Vec3{h, 0, 0}).x +
                          at(p + Vec3{0, h, 0}).y - at(p - Vec3{0, h, 0}).y +
                          at(p + Vec3{0, 0, h}).z - at(p - Vec3{0, 0, h}).z) /
                         (2.0 * h);
        CHECK(std::abs(div) <= 1e-6 * med.k * at(p).norm());
    }
}

TEST_CASE("regular waves stay finite arbitrarily close to the origin") {
    const Vec3 p{1e-6 / med.k, 0.0, 0.5e-6 / med.k};
    for (int j = 1; j <= 48; ++j) {
        const ComplexVec3 v = eval_F(WaveType::regular, smn_from_j(j), med, p, {});
        CHECK(std::isfinite(v.norm()));
    }
    CHECK_THROWS_AS(eval_F(WaveType::outgoing, {2, 0, 1}, med, {}, {}), std::domain_error);
    CHECK_THROWS_AS(eval_F(WaveType::incoming, {2, 0, 1}, med, {0.1, 0, 0}, {0.1, 0, 0}),
                    std::domain_error);
}

TEST_CASE("sphere-quadrature orthogonality reproduces the nine-entry table") {
    // Independent oracle: spectrally-accurate sphere rule, definition-level
    // integrand. Pins the overall normalization (diagonals) and the zeros.
    const std::map<std::pair<int, int>, cplx> B{
        {{1, 1}, {0, 0}},  {{1, 4}, {0, 1}},  {{1, 3}, {0, -1}},
        {{3, 1}, {0, -1}}, {{3, 4}, {0, 0}},  {{3, 3}, {0, -2}},
        {{4, 1}, {0, 1}},  {{4, 4}, {0, 2}},  {{4, 3}, {0, 0}}};
    const double lam = 2.0 * pi / med.k;
    const SphereRule rule = sphere_rule(0.62 * lam, 24, 48);
    const double scale = 1.0 / (2.0 * med.k * med.k);

    std::mt19937 rng(5);
    std::uniform_int_distribution<int> jd(1, 48);
    for (auto [cx, Bval] : B) {
        const WaveType c = wave_type_from_int(cx.first);
        const WaveType x = wave_type_from_int(cx.second);
        // diagonal entries for a spread of modes
        for (int j : {1, 2, 5, 6, 11, 17, 23, 30, 37, 48}) {
            const cplx got = swf_inner_product_sphere(c, x, smn_from_j(j), smn_from_j(j), med, rule);
            CHECK(std::abs(got - Bval * scale) <= 1e-10 * scale);
        }
        // random cross terms must vanish
        for (int t = 0; t < 6; ++t) {
            int j1 = jd(rng), j2 = jd(rng);
            if (j1 == j2) j2 = (j2 % 48) + 1;
            const cplx got = swf_inner_product_sphere(c, x, smn_from_j(j1), smn_from_j(j2), med, rule);
            CHECK(std::abs(got) <= 1e-10 * scale);
        }
    }
}

TEST_CASE("far-field pattern matches the large-argument limit") {
    // At kr = 1e4 the leading asymptotic remainder n(n+1)/(2kr) of the n = 4
    // modes is exactly 1e-3; probe at twice that distance for clean margin.
    const double r = 2e4 / med.k;
    std::mt19937 rng(17);
    for (int t = 0; t < 10; ++t) {
        const Vec3 dir = random_direction(rng);
        const double theta = std::acos(dir.z);
        const double phi = std::atan2(dir.y, dir.x);
        const cplx carrier = std::exp(cplx{0.0, -med.k * r}) / (med.k * r);
        for (int j = 1; j <= 48; ++j) {
            const ModeIndex mode = smn_from_j(j);
            const ComplexVec3 full = eval_F(WaveType::outgoing, mode, med, r * dir, {});
            const ComplexVec3 asym = carrier * mode_farfield(mode, med, theta, phi);
            CHECK((full - asym).norm() <= 1e-3 * asym.norm());
        }
    }
}

TEST_CASE("far fields are transverse") {
    for (int j = 1; j <= 48; ++j) {
        const ComplexVec3 k1 = mode_farfield(smn_from_j(j), med, 0.7, 1.2);
        CHECK(k1.basis == VecBasis::spherical);
        CHECK(std::abs(k1.x) == 0.0);  // radial component exactly zero
    }
}

TEST_CASE("unit-coefficient mode power is 1/(4k)") {
    // P = (1/2) \oint |K_j|^2 dOmega must equal the normalization constant.
    std::vector<double> u, wu;
    gauss_legendre(24, u, wu);
    const int q_phi = 48;
    for (int j : {1, 2, 6, 9, 20, 33, 48}) {
        const ModeIndex mode = smn_from_j(j);
        double acc = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            const double theta = std::acos(u[i]);
            for (int p = 0; p < q_phi; ++p) {
                const double phi = 2.0 * pi * p / q_phi;
                const ComplexVec3 K = mode_farfield(mode, med, theta, phi);
                acc += wu[i] * (2.0 * pi / q_phi) * 0.5 *
                       (std::norm(K.y) + std::norm(K.z));
            }
        }
        CHECK(acc == doctest::Approx(mode_power_unit_coefficient(med)).epsilon(1e-12));
    }
}

TEST_CASE("basis conversions are involutive") {
    std::mt19937 rng(23);
    for (int t = 0; t < 50; ++t) {
        const ComplexVec3 v{random_cplx(rng), random_cplx(rng), random_cplx(rng), VecBasis::spherical};
        std::uniform_real_distribution<double> th(0.0, pi), ph(-pi, pi);
        const double theta = th(rng), phi = ph(rng);
        const ComplexVec3 back = cartesian_to_spherical(spherical_to_cartesian(v, theta, phi), theta, phi);
        CHECK((back - v).norm() <= 1e-14 * v.norm());
    }
    CHECK_THROWS_AS(spherical_to_cartesian({1.0, 0.0, 0.0, VecBasis::cartesian}, 0.1, 0.2),
                    std::invalid_argument);
}

TEST_CASE("ModeBank agrees with single-mode evaluation") {
    const ModeSet ms(4);
    const ModeBank bank(ms, med, {0.05, -0.02, 0.01});
    ModeBank::Workspace ws;
    std::vector<ComplexVec3> out(static_cast<std::size_t>(ms.count()));
    std::mt19937 rng(29);
    for (int t = 0; t < 10; ++t) {
        const Vec3 p = Vec3{0.05, -0.02, 0.01} + (2.0 / med.k) * random_direction(rng);
        for (WaveType c : {WaveType::regular, WaveType::incoming, WaveType::outgoing}) {
            bank.eval(c, p, ws, out);
            for (int i = 0; i < ms.count(); ++i) {
                const Vec3 d = p - bank.origin();
                const double theta = std::acos(d.z / d.norm());
                const double phi = std::atan2(d.y, d.x);
                const ComplexVec3 ref = spherical_to_cartesian(
                    eval_F(c, ms.at(i), med, p, bank.origin()), theta, phi);
                CHECK((out[static_cast<std::size_t>(i)] - ref).norm() <= 1e-13 * std::max(ref.norm(), 1e-30));
            }
        }
    }
    // dual bookkeeping
    for (int i = 0; i < ms.count(); ++i)
        CHECK(bank.dual_position(i) == ms.at(i).dual().flat() - 1);
}
