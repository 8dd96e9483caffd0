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

#include "swfde/legendre.hpp"
#include "swfde/modes.hpp"
#include "swfde/radial.hpp"
#include "swfde/types.hpp"

namespace swfde {

// ===========================================================================
// Vector spherical wave functions F_j^{(c)}.
//
// Power-normalized form, time convention e^{+jwt}:
//
//   F^{(c)}_{1mn} = A_{mn} z_n^{(c)}(kr) [ j m Pb/sin e_theta - dPb/dth e_phi ] e^{jm phi}
//   F^{(c)}_{2mn} = A_{mn} [ n(n+1)/(kr) z_n^{(c)} Pb e_r
//                            + {kr z_n^{(c)}}'/(kr) ( dPb/dth e_theta + j m Pb/sin e_phi ) ] e^{jm phi}
//
//   A_{mn} = (-m/|m|)^m / sqrt(4 pi k n (n+1)),  Pb = Pbar_n^{|m|}(cos theta)
//
// with the overall 1/sqrt(2k) chosen so that the surface-integral inner
// product <F_j^{(c)}, F_j'^{(x)*}> equals delta_jj' B^{(c,x)} / (2 k^2) with
//
//        x'=1   x'=4   x'=3
//   c=1   0      j     -j
//   c=3  -j      0     -2j
//   c=4   j     2j      0
//
// Key identity: curl F^{(c)}_{smn} = k F^{(c)}_{(3-s)mn}.
// ===========================================================================

// Single-mode evaluation; returns the spherical-basis value at p relative to
// origin. Singular wave types require |p - origin| > 0.
ComplexVec3 eval_F(WaveType c, ModeIndex mode, const Medium& med, Vec3 p, Vec3 origin);

// curl F at p; equals k * F^{(c)} of the dual-polarization mode.
ComplexVec3 eval_curl_F(WaveType c, ModeIndex mode, const Medium& med, Vec3 p, Vec3 origin);

// Far-field angular pattern K_j of the outgoing wave:
//   F_j^{(4)} -> K_j(theta, phi) e^{-jkr} / (kr)   as  kr -> inf.
// The returned vector is spherical-basis with zero radial component.
ComplexVec3 mode_farfield(ModeIndex mode, const Medium& med, double theta, double phi);

// Total radiated power of sum_j b_j F_j^{(4)} fields scaled by k sqrt(eta):
// each unit-coefficient mode carries 1/(4k) watt under this normalization.
inline double mode_power_unit_coefficient(const Medium& med) { return 1.0 / (4.0 * med.k); }

// ===========================================================================
// Batched evaluator: all modes of a ModeSet at one point, sharing the
// Legendre chains, radial recurrences and azimuthal phases. This is the hot
// kernel behind decomposition and synthesis.
// ===========================================================================
class ModeBank {
  public:
    ModeBank(ModeSet modeset, Medium med, Vec3 origin);

    struct Workspace {
        LegendreChains legendre;
        std::vector<cplx> z, dz;     // radial values/aux per degree
        std::vector<cplx> azimuth;   // e^{j m phi}, m = 0..n_max
    };

    // Cartesian values of every mode at p, in flat-index order.
    // out.size() must be count(). Throws for singular evaluation points.
    void eval(WaveType c, Vec3 p, Workspace& ws, std::span<ComplexVec3> out) const;

    // Position of the curl partner of the mode at position i (same ModeSet).
    [[nodiscard]] int dual_position(int i) const { return dual_[static_cast<std::size_t>(i)]; }

    [[nodiscard]] const ModeSet& modeset() const { return modeset_; }
    [[nodiscard]] const Medium& medium() const { return med_; }
    [[nodiscard]] Vec3 origin() const { return origin_; }
    [[nodiscard]] int count() const { return modeset_.count(); }

  private:
    ModeSet modeset_;
    Medium med_;
    Vec3 origin_;
    std::vector<int> dual_;
    std::vector<double> prefactor_;  // A_{mn} including the sign factor
};

}  // namespace swfde
