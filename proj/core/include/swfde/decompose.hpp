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

#include "swfde/swf.hpp"
#include "swfde/trace.hpp"

namespace swfde {

// ===========================================================================
// Orthogonality-based decomposition of a surface trace.
//
// The inner product is the closed-surface integral
//
//   <E, F*> = \oint { E x (curl F)* - F* x (curl E) } . n^ dS
//
// where curl F* comes from the dual-polarization identity and curl E is
// never differenced numerically: it is replaced by -j k eta H from the
// trace. Coefficients follow as
//
//   b_j  =  (k / (j sqrt(eta))) <E, F_j^{(4)*}>          (outgoing)
//   a_j  = -(k / (j sqrt(eta))) <E, F_j^{(3)*}>          (incoming)
//   b'_j = (2k / (j sqrt(eta))) <E, F_j^{(1)*}>          (radiating, = b_j - a_j)
//
// with j the imaginary unit in the prefactors.
//
// The quadrature reduction is a fixed-order blocked sum: samples are cut into
// constant-size blocks, each block accumulates serially, and the per-block
// partials combine in block order, so results are bitwise identical for any
// worker count.
// ===========================================================================

cplx inner_product_field_mode(const FieldTrace& trace, ModeIndex mode, WaveType c,
                              const Medium& med, Vec3 origin);

CoefficientSet decompose_outgoing(const FieldTrace& trace, ModeSet modeset, const Medium& med,
                                  Vec3 origin);
CoefficientSet decompose_incoming(const FieldTrace& trace, ModeSet modeset, const Medium& med,
                                  Vec3 origin);
CoefficientSet decompose_radiating(const FieldTrace& trace, ModeSet modeset, const Medium& med,
                                   Vec3 origin);

// ---------------------------------------------------------------------------
// Least-squares baseline (pseudo-inverse fit of the tangential E field) and
// the conditioning report used to compare expansion bases.
// ---------------------------------------------------------------------------
struct LeastSquaresResult {
    std::vector<CoefficientSet> coefficients;  // one set per requested wave type
    double relative_residual = 0.0;
    double condition_number = 0.0;
    bool rank_deficient = false;
};

LeastSquaresResult decompose_leastsquares(const FieldTrace& trace, ModeSet modeset,
                                          const Medium& med, Vec3 origin,
                                          std::span<const WaveType> basis);

struct ConditionReport {
    double condition_number = 0.0;
    double sv_max = 0.0;
    double sv_min = 0.0;
    std::vector<double> singular_values;  // descending
};

ConditionReport condition_report(const SurfaceMesh& mesh, ModeSet modeset, const Medium& med,
                                 Vec3 origin, std::span<const WaveType> basis);

}  // namespace swfde
