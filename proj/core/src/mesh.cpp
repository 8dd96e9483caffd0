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

#include "swfde/mesh.hpp"

#include <cmath>
#include <stdexcept>

namespace swfde {

double SurfaceMesh::total_area() const {
    double a = 0.0;
    for (const auto& s : samples) a += s.weight;
    return a;
}

Vec3 SurfaceMesh::normal_integral() const {
    Vec3 acc;
    for (const auto& s : samples) acc = acc + s.weight * s.normal;
    return acc;
}

double SurfaceMesh::winding_number(Vec3 p) const {
    double acc = 0.0;
    for (const auto& s : samples) {
        const Vec3 d = s.position - p;
        const double r = d.norm();
        if (r == 0.0) return 0.5;  // on the surface
        acc += s.weight * d.dot(s.normal) / (r * r * r);
    }
    return acc / (4.0 * pi);
}

void SurfaceMesh::validate() const {
    for (const auto& s : samples) {
        if (!(s.weight > 0.0)) throw std::domain_error("SurfaceMesh: non-positive weight");
        if (std::abs(s.normal.norm() - 1.0) > 1e-12)
            throw std::domain_error("SurfaceMesh: normal is not unit length");
    }
}

void BoxSpec::validate() const {
    if (!(half_extents.x > 0.0 && half_extents.y > 0.0 && half_extents.z > 0.0))
        throw std::domain_error("BoxSpec: half extents must be positive");
    for (const auto& pair : cells_per_face)
        for (int c : pair)
            if (c < 2) throw std::domain_error("BoxSpec: each face needs at least 2x2 cells");
}

void gauss_legendre_rule(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw std::domain_error("gauss_legendre_rule: n must be >= 1");
    nodes.resize(static_cast<std::size_t>(n));
    weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double p1 = 0.0, dp = 1.0;
        for (int it = 0; it < 100; ++it) {
            double a = 1.0, b = x;
            for (int k = 2; k <= n; ++k) {
                const double c = ((2.0 * k - 1.0) * x * b - (k - 1.0) * a) / k;
                a = b;
                b = c;
            }
            p1 = (n == 1) ? x : b;
            dp = (n == 1) ? 1.0 : n * (x * b - a) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[static_cast<std::size_t>(i)] = x;
        weights[static_cast<std::size_t>(i)] =
            (n == 1) ? 2.0 : 2.0 / ((1.0 - x * x) * dp * dp);
    }
}

namespace {

struct Rule1D {
    std::vector<double> pos;  // offsets in [-1, 1]
    std::vector<double> w;    // weights summing to 2
};

Rule1D face_rule(int cells, QuadratureRule rule) {
    Rule1D r;
    if (rule == QuadratureRule::midpoint) {
        r.pos.resize(static_cast<std::size_t>(cells));
        r.w.assign(static_cast<std::size_t>(cells), 2.0 / cells);
        for (int i = 0; i < cells; ++i)
            r.pos[static_cast<std::size_t>(i)] = -1.0 + (2.0 * i + 1.0) / cells;
    } else {
        gauss_legendre_rule(cells, r.pos, r.w);
    }
    return r;
}

}  // namespace

SurfaceMesh build_box_mesh(const BoxSpec& spec, QuadratureRule rule) {
    spec.validate();
    SurfaceMesh mesh;
    mesh.closed = true;

    const double he[3] = {spec.half_extents.x, spec.half_extents.y, spec.half_extents.z};
    const double ce[3] = {spec.center.x, spec.center.y, spec.center.z};

    for (int axis = 0; axis < 3; ++axis) {
        const int a1 = (axis + 1) % 3;
        const int a2 = (axis + 2) % 3;
        const auto& cells = spec.cells_per_face[static_cast<std::size_t>(axis)];
        const Rule1D r1 = face_rule(cells[0], rule);
        const Rule1D r2 = face_rule(cells[1], rule);
        for (double sgn : {+1.0, -1.0}) {
            for (int i = 0; i < cells[0]; ++i) {
                for (int j = 0; j < cells[1]; ++j) {
                    SurfaceSample s;
                    double p[3];
                    p[axis] = ce[axis] + sgn * he[axis];
                    p[a1] = ce[a1] + he[a1] * r1.pos[static_cast<std::size_t>(i)];
                    p[a2] = ce[a2] + he[a2] * r2.pos[static_cast<std::size_t>(j)];
                    s.position = {p[0], p[1], p[2]};
                    double n[3] = {0.0, 0.0, 0.0};
                    n[axis] = sgn;
                    s.normal = {n[0], n[1], n[2]};
                    s.weight = he[a1] * r1.w[static_cast<std::size_t>(i)] * he[a2] *
                               r2.w[static_cast<std::size_t>(j)];
                    mesh.samples.push_back(s);
                }
            }
        }
    }
    return mesh;
}

}  // namespace swfde
