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

// Test-only oracles shared across the suites: Gauss-Legendre rules, sphere
// quadrature of SWF inner products, and random helpers. Everything here is
// independent of the library code paths it is used to check (only eval_F and
// plain arithmetic are consumed).

#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "swfde/swf.hpp"

namespace swfde_test {

using swfde::cplx;
using swfde::ComplexVec3;
using swfde::Vec3;

inline void gauss_legendre(int q, std::vector<double>& x, std::vector<double>& w) {
    x.resize(static_cast<std::size_t>(q));
    w.resize(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) {
        double xi = std::cos(swfde::pi * (i + 0.75) / (q + 0.5));
        double p1 = 0.0, dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double a = 1.0, b = xi;
            for (int k = 2; k <= q; ++k) {
                const double c = ((2.0 * k - 1.0) * xi * b - (k - 1.0) * a) / k;
                a = b;
                b = c;
            }
            p1 = b;
            dp = q * (xi * b - a) / (xi * xi - 1.0);
            const double dx = p1 / dp;
            xi -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        x[static_cast<std::size_t>(i)] = xi;
        w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - xi * xi) * dp * dp);
    }
}

// Quadrature nodes covering a sphere of radius r: Gauss-Legendre in cos(theta)
// x uniform (periodic-exact) in phi. Spectrally accurate for SWF products.
struct SphereRule {
    std::vector<Vec3> points;
    std::vector<double> weights;  // include r^2 surface element
    std::vector<Vec3> normals;    // outward radial
};

inline SphereRule sphere_rule(double r, int q_theta, int q_phi, Vec3 center = {}) {
    std::vector<double> u, wu;
    gauss_legendre(q_theta, u, wu);
    SphereRule rule;
    for (int i = 0; i < q_theta; ++i) {
        const double ct = u[static_cast<std::size_t>(i)];
        const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
        for (int jp = 0; jp < q_phi; ++jp) {
            const double phi = 2.0 * swfde::pi * jp / q_phi;
            const Vec3 n{st * std::cos(phi), st * std::sin(phi), ct};
            rule.points.push_back(center + r * n);
            rule.normals.push_back(n);
            rule.weights.push_back(wu[static_cast<std::size_t>(i)] * (2.0 * swfde::pi / q_phi) * r * r);
        }
    }
    return rule;
}

// <F_j^{(c)}, F_j'^{(x)*}> on a sphere, straight from the definition with the
// curls substituted by the dual-polarization identity.
inline cplx swf_inner_product_sphere(swfde::WaveType c, swfde::WaveType x, swfde::ModeIndex mj,
                                     swfde::ModeIndex mjp, const swfde::Medium& med,
                                     const SphereRule& rule) {
    cplx acc{};
    for (std::size_t i = 0; i < rule.points.size(); ++i) {
        const Vec3 p = rule.points[i];
        const double theta = std::acos(rule.normals[i].z);
        const double phi = std::atan2(rule.normals[i].y, rule.normals[i].x);
        auto cart = [&](swfde::WaveType cc, swfde::ModeIndex mm) {
            return swfde::spherical_to_cartesian(swfde::eval_F(cc, mm, med, p, {}), theta, phi);
        };
        const ComplexVec3 u = cart(c, mj);
        const ComplexVec3 curl_v = (med.k * cart(x, mjp.dual())).conj();
        const ComplexVec3 v = cart(x, mjp).conj();
        const ComplexVec3 curl_u = med.k * cart(c, mj.dual());
        const cplx integrand = dot(cross(u, curl_v) - cross(v, curl_u), rule.normals[i]);
        acc += rule.weights[i] * integrand;
    }
    return acc;
}

inline cplx random_cplx(std::mt19937& rng) {
    std::normal_distribution<double> d(0.0, 1.0);
    return {d(rng), d(rng)};
}

inline Vec3 random_direction(std::mt19937& rng) {
    std::normal_distribution<double> d(0.0, 1.0);
    Vec3 v{d(rng), d(rng), d(rng)};
    while (v.norm() < 1e-3) v = {d(rng), d(rng), d(rng)};
    return v.normalized();
}

}  // namespace swfde_test
