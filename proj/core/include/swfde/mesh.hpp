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
#include <cstddef>
#include <optional>
#include <vector>

#include "swfde/types.hpp"

namespace swfde {

// One quadrature sample of a closed surface.
struct SurfaceSample {
    Vec3 position;  // m
    Vec3 normal;    // outward, unit length
    double weight;  // m^2
};

struct SurfaceMesh {
    std::vector<SurfaceSample> samples;
    bool closed = true;

    [[nodiscard]] std::size_t size() const { return samples.size(); }
    [[nodiscard]] double total_area() const;
    [[nodiscard]] Vec3 normal_integral() const;  // ~0 for closed surfaces

    // Solid-angle (Gauss) test: ~1 when p is enclosed, ~0 outside.
    [[nodiscard]] double winding_number(Vec3 p) const;

    void validate() const;  // unit normals, positive weights
};

// Per-face quadrature of the box builder. The midpoint rule is what an FDTD
// dump naturally provides (cell-centered samples, weight = cell area) and is
// second-order accurate. The Gauss-Legendre rule places the same number of
// nodes per face at Gauss abscissas and converges spectrally; it backs the
// high-accuracy verification paths.
enum class QuadratureRule { midpoint, gauss_legendre };

// Axis-aligned closed box. cells_per_face holds, per face pair (+-x, +-y,
// +-z), the two grid counts along the remaining axes in cyclic order
// (axis+1, axis+2).
struct BoxSpec {
    Vec3 center;
    Vec3 half_extents;
    std::array<std::array<int, 2>, 3> cells_per_face{};

    static BoxSpec cube(Vec3 center, double half_extent, int cells) {
        BoxSpec s;
        s.center = center;
        s.half_extents = {half_extent, half_extent, half_extent};
        s.cells_per_face = {{{cells, cells}, {cells, cells}, {cells, cells}}};
        return s;
    }
    void validate() const;
};

SurfaceMesh build_box_mesh(const BoxSpec& spec, QuadratureRule rule = QuadratureRule::midpoint);

// Gauss-Legendre nodes/weights on [-1, 1] (Newton on the recurrence).
void gauss_legendre_rule(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace swfde
