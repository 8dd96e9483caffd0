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

#include <span>
#include <vector>

#include "swfde/trace.hpp"

namespace swfde {

// Analytic ground-truth generators. Everything here produces exact
// closed-form (E, H) pairs satisfying the source-free curl equations under
// e^{+jwt}, so the decomposition operators can be checked against known
// answers.

struct EHPair {
    ComplexVec3 E;  // V/m
    ComplexVec3 H;  // A/m
};

struct DipoleSource {
    enum class Kind { electric, magnetic };
    Vec3 position;                       // m
    ComplexVec3 moment;                  // A*m (electric) or V*m (magnetic), Cartesian
    Kind kind = Kind::electric;

    void validate() const {
        if (moment.norm() == 0.0) throw std::domain_error("DipoleSource: zero moment");
        if (moment.basis != VecBasis::cartesian)
            throw std::domain_error("DipoleSource: moment must be Cartesian");
    }
};

struct Scene {
    std::vector<DipoleSource> sources;
    Medium medium;
};

// Exact Hertzian dipole field with all 1/r, 1/r^2, 1/r^3 terms.
EHPair dipole_fields(const DipoleSource& src, const Medium& med, Vec3 p);

// Far-field pattern of the dipole, r-normalized like mode_farfield:
// E(r) = E_ff(theta, phi) e^{-jkr} / (kr) with the translation phase of an
// off-origin source included.
ComplexVec3 dipole_farfield(const DipoleSource& src, const Medium& med, double theta, double phi);

// Closed-form total radiated power of a single dipole.
double dipole_radiated_power(const DipoleSource& src, const Medium& med);

// Field synthesis from coefficient vectors:
//   E = k sqrt(eta) sum_j [ b_j F_j^{(4)} + a_j F_j^{(3)} ]
// with H built from the curl-duality companion expansion so the pair
// satisfies curl E = -j k eta H identically. Either set may be empty.
std::vector<EHPair> synthesize_from_coefficients(const CoefficientSet& b, const CoefficientSet& a,
                                                 const Medium& med, std::span<const Vec3> points,
                                                 Vec3 origin);

// Superpose every scene source on the mesh samples.
FieldTrace sample_scene_on_mesh(const Scene& scene, const SurfaceMesh& mesh);

// n_max = ceil(kr_max + 3 (kr_max)^{1/3}), clamped to >= 1.
int truncation_order_suggestion(double kr_max);

}  // namespace swfde
