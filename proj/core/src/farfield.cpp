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

#include "swfde/farfield.hpp"

#include <cmath>

#include "swfde/parallel.hpp"
#include "swfde/swf.hpp"

namespace swfde {

FarFieldGrid FarFieldGrid::full_sphere(double dtheta_deg, double dphi_deg) {
    if (!(dtheta_deg > 0.0) || !(dphi_deg > 0.0))
        throw std::domain_error("FarFieldGrid: angular steps must be positive");
    FarFieldGrid g;
    for (double t = 0.0; t <= 180.0 + 1e-9; t += dtheta_deg) g.theta_deg.push_back(t);
    for (double p = 0.0; p < 360.0 - 1e-9; p += dphi_deg) g.phi_deg.push_back(p);
    return g;
}

FarFieldGrid FarFieldGrid::phi_cut(double phi_deg_value, double dtheta_deg) {
    if (!(dtheta_deg > 0.0)) throw std::domain_error("FarFieldGrid: angular steps must be positive");
    FarFieldGrid g;
    for (double t = 0.0; t <= 180.0 + 1e-9; t += dtheta_deg) g.theta_deg.push_back(t);
    g.phi_deg.push_back(phi_deg_value);
    return g;
}

FarFieldPattern superpose_farfields(const CoefficientSet& b_prime, const Medium& med,
                                    const FarFieldGrid& grid) {
    b_prime.validate();
    med.validate();
    if (b_prime.kind == CoefficientKind::incoming)
        throw std::domain_error("superpose_farfields: incoming coefficients have no far field");

    FarFieldPattern p;
    p.grid = grid;
    p.medium = med;
    p.e_theta.assign(grid.size(), cplx{});
    p.e_phi.assign(grid.size(), cplx{});

    const cplx scale = med.k * std::sqrt(med.eta);
    const std::size_t nphi = grid.phi_deg.size();
    parallel_blocks(grid.size(), 512, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t row = begin; row < end; ++row) {
            const double theta = grid.theta_deg[row / nphi] * pi / 180.0;
            const double phi = grid.phi_deg[row % nphi] * pi / 180.0;
            cplx et{}, ep{};
            for (int i = 0; i < b_prime.modeset.count(); ++i) {
                const cplx w = b_prime.values[static_cast<std::size_t>(i)];
                if (w == cplx{}) continue;
                const ComplexVec3 K = mode_farfield(b_prime.modeset.at(i), med, theta, phi);
                et += w * K.y;
                ep += w * K.z;
            }
            p.e_theta[row] = scale * et;
            p.e_phi[row] = scale * ep;
        }
    });
    return p;
}

double radiated_power(const CoefficientSet& coeffs) {
    coeffs.validate();
    double acc = 0.0;
    for (const cplx& v : coeffs.values) acc += std::norm(v);
    return acc * mode_power_unit_coefficient(coeffs.medium);
}

namespace {

// Trapezoid in theta x periodic rectangle in phi over the grid rows.
double sphere_quadrature(const FarFieldPattern& p, const std::vector<double>& f) {
    const auto& th = p.grid.theta_deg;
    const auto& ph = p.grid.phi_deg;
    if (th.size() < 3 || ph.size() < 3)
        throw std::domain_error("sphere quadrature requires a full-sphere grid");
    const double dphi = 2.0 * pi / static_cast<double>(ph.size());
    double acc = 0.0;
    for (std::size_t it = 0; it < th.size(); ++it) {
        const double theta = th[it] * pi / 180.0;
        double dtheta;
        if (it == 0)
            dtheta = 0.5 * (th[1] - th[0]) * pi / 180.0;
        else if (it == th.size() - 1)
            dtheta = 0.5 * (th[it] - th[it - 1]) * pi / 180.0;
        else
            dtheta = 0.5 * (th[it + 1] - th[it - 1]) * pi / 180.0;
        for (std::size_t ip = 0; ip < ph.size(); ++ip)
            acc += f[it * ph.size() + ip] * std::sin(theta) * dtheta * dphi;
    }
    return acc;
}

}  // namespace

double radiated_power_quadrature(const FarFieldPattern& pattern) {
    std::vector<double> u(pattern.grid.size());
    const double c = 1.0 / (2.0 * pattern.medium.eta * pattern.medium.k * pattern.medium.k);
    for (std::size_t i = 0; i < u.size(); ++i)
        u[i] = c * (std::norm(pattern.e_theta[i]) + std::norm(pattern.e_phi[i]));
    return sphere_quadrature(pattern, u);
}

std::vector<double> directivity(const FarFieldPattern& pattern, double total_radiated_power_w) {
    if (!(total_radiated_power_w > 0.0))
        throw std::domain_error("directivity: radiated power must be positive");
    const double c = 1.0 / (2.0 * pattern.medium.eta * pattern.medium.k * pattern.medium.k);
    std::vector<double> out(pattern.grid.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double u = c * (std::norm(pattern.e_theta[i]) + std::norm(pattern.e_phi[i]));
        out[i] = 10.0 * std::log10(std::max(4.0 * pi * u / total_radiated_power_w, 1e-300));
    }
    return out;
}

}  // namespace swfde
