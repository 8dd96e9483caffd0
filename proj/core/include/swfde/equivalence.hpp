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

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "swfde/trace.hpp"

namespace swfde {

// ===========================================================================
// Coefficient-space equivalence transforms and signal-flow solvers.
//
// Original scenario:  b = T v + S a,  a = M11 b  (environment reflection)
// Equivalent source:  b^ = S'(a^ - a') + b',  a^ = M11 b^,  with S' = I
//                     (free space returns every incoming mode as the matching
//                      outgoing mode).
//
// The three source choices:
//   love:               b' = b,      a' = -a
//   naive_outgoing:     b' = b,      a' = 0    (no equivalence when a != 0)
//   outgoing_corrected: b' = b - a,  a' = 0    (equivalence holds)
// ===========================================================================

struct ChannelMatrix {
    enum class Role { full, self_reflection };  // M vs M11
    Eigen::MatrixXcd entries;
    Role role = Role::full;

    [[nodiscard]] int size() const { return static_cast<int>(entries.rows()); }
    void validate() const {
        if (entries.rows() != entries.cols())
            throw std::domain_error("ChannelMatrix: matrix must be square");
    }
};

enum class EquivalenceCase { love, naive_outgoing, outgoing_corrected };

struct SignalFlowModel {
    Eigen::VectorXcd transmission;       // T
    Eigen::VectorXcd receiving;          // R (optional, may be empty)
    Eigen::MatrixXcd antenna_scattering; // S
    ChannelMatrix m11;                   // environment self-reflection
    cplx port_wave{1.0, 0.0};            // v

    void validate() const;
};

struct FlowSolution {
    Eigen::VectorXcd b;  // total outgoing
    Eigen::VectorXcd a;  // incoming
    cplx received_wave{};  // w = R . a (zero when R is empty)
};

// (b', a') from (b, a) for the chosen case. The sets must share a modeset.
std::pair<CoefficientSet, CoefficientSet> equivalent_source(EquivalenceCase c,
                                                            const CoefficientSet& b,
                                                            const CoefficientSet& a);

// Solve b = Tv + S M11 b. Throws when (I - S M11) is near singular, with the
// condition estimate in the message.
FlowSolution solve_original_flow(const SignalFlowModel& model);

// Solve b^ = (I - M11)^{-1} (b' - a'), a^ = M11 b^.
struct EquivalentFlowSolution {
    CoefficientSet b_hat;
    CoefficientSet a_hat;
};
EquivalentFlowSolution solve_equivalent_flow(const CoefficientSet& b_prime,
                                             const CoefficientSet& a_prime,
                                             const ChannelMatrix& m11);

// a_R = M b_T.
CoefficientSet apply_channel(const ChannelMatrix& m, const CoefficientSet& b_t);

// Love equivalent currents J = n^ x H, M = -n^ x E on the trace mesh.
struct SurfaceCurrents {
    std::vector<ComplexVec3> electric;  // J, A/m
    std::vector<ComplexVec3> magnetic;  // M, V/m
};
SurfaceCurrents love_currents(const FieldTrace& trace);

// Conversions between CoefficientSet values and Eigen vectors.
Eigen::VectorXcd to_eigen(const CoefficientSet& c);
CoefficientSet from_eigen(const Eigen::VectorXcd& v, CoefficientKind kind, ModeSet modeset,
                          const Medium& med);

}  // namespace swfde
