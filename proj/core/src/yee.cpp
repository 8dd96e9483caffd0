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

#include "swfde/yee.hpp"

#include <cmath>

namespace swfde {

void YeeSurfacePatch::validate() const {
    if (n1 < 1 || n2 < 1) throw std::domain_error("YeeSurfacePatch: empty site grid");
    if (std::abs(tangent1.norm() - 1.0) > 1e-12 || std::abs(tangent2.norm() - 1.0) > 1e-12 ||
        std::abs(normal.norm() - 1.0) > 1e-12)
        throw std::domain_error("YeeSurfacePatch: axes must be unit vectors");
    if (std::abs(tangent1.dot(tangent2)) > 1e-12)
        throw std::domain_error("YeeSurfacePatch: tangents must be orthogonal");
    const std::size_t sites = static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2);
    for (const auto& e : E)
        if (e.size() != sites) throw std::domain_error("YeeSurfacePatch: E component size mismatch");
    for (const auto& h : H) {
        if (h.stagger_axis != 0 && h.stagger_axis != 1)
            throw std::domain_error("YeeSurfacePatch: stagger_axis must be 0 or 1");
        const std::size_t want = (h.stagger_axis == 0)
                                     ? static_cast<std::size_t>(n1 + 1) * static_cast<std::size_t>(n2)
                                     : static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2 + 1);
        if (h.values.size() != want)
            throw std::domain_error("YeeSurfacePatch: staggered H component size mismatch");
    }
}

FieldTrace colocate_yee(std::span<const YeeSurfacePatch> patches, double delta, double dt,
                        double frequency) {
    if (!(delta > 0.0)) throw std::domain_error("colocate_yee: cell size must be positive");
    if (dt < 0.0) throw std::domain_error("colocate_yee: time step must be non-negative");
    if (!(frequency > 0.0)) throw std::domain_error("colocate_yee: frequency must be positive");

    const double w_phase = 2.0 * pi * frequency * dt / 2.0;
    const cplx phase{std::cos(w_phase), std::sin(w_phase)};  // e^{+j w dt/2}

    FieldTrace trace;
    trace.frequency = frequency;
    for (const auto& patch : patches) {
        patch.validate();
        for (int i1 = 0; i1 < patch.n1; ++i1) {
            for (int i2 = 0; i2 < patch.n2; ++i2) {
                const std::size_t site = static_cast<std::size_t>(i1) *
                                             static_cast<std::size_t>(patch.n2) +
                                         static_cast<std::size_t>(i2);
                SurfaceSample s;
                s.position = patch.origin + (delta * i1) * patch.tangent1 +
                             (delta * i2) * patch.tangent2;
                s.normal = patch.normal;
                s.weight = delta * delta;
                trace.mesh.samples.push_back(s);

                trace.E.push_back({patch.E[0][site], patch.E[1][site], patch.E[2][site],
                                   VecBasis::cartesian});

                cplx h[3];
                for (int comp = 0; comp < 3; ++comp) {
                    const auto& sc = patch.H[static_cast<std::size_t>(comp)];
                    cplx lo, hi;
                    if (sc.stagger_axis == 0) {
                        const std::size_t stride = static_cast<std::size_t>(patch.n2);
                        lo = sc.values[static_cast<std::size_t>(i1) * stride +
                                       static_cast<std::size_t>(i2)];
                        hi = sc.values[static_cast<std::size_t>(i1 + 1) * stride +
                                       static_cast<std::size_t>(i2)];
                    } else {
                        const std::size_t stride = static_cast<std::size_t>(patch.n2 + 1);
                        lo = sc.values[static_cast<std::size_t>(i1) * stride +
                                       static_cast<std::size_t>(i2)];
                        hi = sc.values[static_cast<std::size_t>(i1) * stride +
                                       static_cast<std::size_t>(i2 + 1)];
                    }
                    h[comp] = 0.5 * (lo + hi) * phase;
                }
                trace.H.push_back({h[0], h[1], h[2], VecBasis::cartesian});
            }
        }
    }
    trace.validate();
    return trace;
}

}  // namespace swfde
