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

#include "swfde/mesh.hpp"
#include "swfde/modes.hpp"
#include "swfde/types.hpp"

namespace swfde {

// Colocated complex E/H phasor samples on a closed surface at one frequency
// (the dumpbox record).
struct FieldTrace {
    SurfaceMesh mesh;
    std::vector<ComplexVec3> E;  // V/m, Cartesian, one per mesh sample
    std::vector<ComplexVec3> H;  // A/m
    double frequency = 0.0;      // Hz

    void validate() const {
        if (E.size() != mesh.size() || H.size() != mesh.size())
            throw std::domain_error("FieldTrace: E/H sample count must match the mesh");
        for (const auto& v : E)
            if (!std::isfinite(v.norm())) throw std::domain_error("FieldTrace: non-finite E value");
        for (const auto& v : H)
            if (!std::isfinite(v.norm())) throw std::domain_error("FieldTrace: non-finite H value");
    }
};

// Which expansion a coefficient vector belongs to.
enum class CoefficientKind {
    outgoing,   // b
    incoming,   // a
    radiating,  // b' = b - a, the equivalent outgoing-only source
};

inline const char* to_string(CoefficientKind k) {
    switch (k) {
        case CoefficientKind::outgoing: return "b";
        case CoefficientKind::incoming: return "a";
        default: return "bprime";
    }
}

// Complex SWF coefficients over a ModeSet, units sqrt(W). values[i] belongs
// to flat index j = i + 1.
struct CoefficientSet {
    CoefficientKind kind = CoefficientKind::outgoing;
    std::vector<cplx> values;
    ModeSet modeset{1};
    Medium medium;

    [[nodiscard]] double norm() const {
        double acc = 0.0;
        for (const auto& v : values) acc += std::norm(v);
        return std::sqrt(acc);
    }

    void validate() const {
        if (static_cast<int>(values.size()) != modeset.count())
            throw std::domain_error("CoefficientSet: length must equal modeset.count()");
    }
};

}  // namespace swfde
