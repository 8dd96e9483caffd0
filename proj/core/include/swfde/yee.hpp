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

#include <array>
#include <vector>

#include "swfde/trace.hpp"

namespace swfde {

// Raw staggered frequency-domain dumps from a Yee-grid FDTD solver, one
// rectilinear surface patch at a time.
//
// E components are given at the n1 x n2 colocation sites
//   p(i1, i2) = origin + i1 * delta * tangent1 + i2 * delta * tangent2.
// Each H component is staggered half a cell along one in-patch axis, so it
// holds one extra sample row along that axis: (n1+1) x n2 for axis 0,
// n1 x (n2+1) for axis 1, value index stag*(n2 or n2+1) pattern below.
struct StaggeredComponent {
    int stagger_axis = 0;            // 0 -> along tangent1, 1 -> along tangent2
    std::vector<cplx> values;        // row-major (i1-major), see size rule above
};

struct YeeSurfacePatch {
    Vec3 origin;
    Vec3 tangent1, tangent2;  // unit in-patch axes
    Vec3 normal;              // outward unit normal
    int n1 = 0, n2 = 0;       // colocation sites per axis
    std::array<std::vector<cplx>, 3> E;       // Cartesian components at sites, n1*n2 each
    std::array<StaggeredComponent, 3> H;      // Cartesian components, staggered

    void validate() const;
};

// Colocate the staggered H components onto the E sites: average the two
// adjacent staggered samples and multiply by the half-time-step phase factor
// e^{+j w dt / 2} (the H dump lags the E time grid by dt/2). Sample weight is
// delta^2.
FieldTrace colocate_yee(std::span<const YeeSurfacePatch> patches, double delta, double dt,
                        double frequency);

}  // namespace swfde
