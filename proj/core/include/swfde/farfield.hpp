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

#pragma once

#include <vector>

#include "swfde/trace.hpp"

namespace swfde {

// Direction grid, outer product of the two angle lists (degrees). Rows of the
// resulting pattern run theta-major, phi-minor, i.e. sorted by (theta, phi).
struct FarFieldGrid {
    std::vector<double> theta_deg;
    std::vector<double> phi_deg;

    static FarFieldGrid full_sphere(double dtheta_deg = 1.0, double dphi_deg = 1.0);
    static FarFieldGrid phi_cut(double phi_deg_value, double dtheta_deg = 1.0);

    [[nodiscard]] std::size_t size() const { return theta_deg.size() * phi_deg.size(); }
};

// r-normalized radiation pattern: the physical field is
// E(r, theta, phi) = [e_theta, e_phi](theta, phi) * e^{-jkr} / (kr).
struct FarFieldPattern {
    FarFieldGrid grid;
    std::vector<cplx> e_theta;  // grid.size() entries, theta-major
    std::vector<cplx> e_phi;
    Medium medium;

    [[nodiscard]] double theta_at(std::size_t row) const {
        return grid.theta_deg[row / grid.phi_deg.size()];
    }
    [[nodiscard]] double phi_at(std::size_t row) const {
        return grid.phi_deg[row % grid.phi_deg.size()];
    }
};

// E_ff = k sqrt(eta) sum_j b'_j K_j(theta, phi). Accepts radiating-kind
// coefficients (or outgoing ones, which is the a = 0 special case).
FarFieldPattern superpose_farfields(const CoefficientSet& b_prime, const Medium& med,
                                    const FarFieldGrid& grid);

// Total power carried by the coefficients: sum |b_j|^2 / (4k).
double radiated_power(const CoefficientSet& coeffs);

// Sphere quadrature of the pattern (requires a full-sphere grid).
double radiated_power_quadrature(const FarFieldPattern& pattern);

// D(theta, phi) = 4 pi U / P_rad in dBi, row-aligned with the pattern.
std::vector<double> directivity(const FarFieldPattern& pattern, double total_radiated_power_w);

}  // namespace swfde
