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

#include "swfde/swf.hpp"

#include <cmath>

namespace swfde {

namespace {

struct SphericalFrame {
    double r, cos_t, sin_t, phi;
    Vec3 e_r, e_t, e_p;
};

SphericalFrame spherical_frame(Vec3 p, Vec3 origin) {
    const Vec3 d = p - origin;
    const double r = d.norm();
    if (r == 0.0) throw std::domain_error("SWF evaluation at the expansion origin is undefined");
    const double rho = std::hypot(d.x, d.y);
    const double cos_t = d.z / r;
    const double sin_t = rho / r;
    const double phi = std::atan2(d.y, d.x);
    const double cp = std::cos(phi), sp = std::sin(phi);
    return {r, cos_t, sin_t, phi,
            {d.x / r, d.y / r, d.z / r},
            {cos_t * cp, cos_t * sp, -sin_t},
            {-sp, cp, 0.0}};
}

double sign_factor(int m) {  // (-m/|m|)^m, defined as 1 for m <= 0
    return (m > 0 && (m % 2) != 0) ? -1.0 : 1.0;
}

}  // namespace

ModeBank::ModeBank(ModeSet modeset, Medium med, Vec3 origin)
    : modeset_(modeset), med_(med), origin_(origin) {
    med_.validate();
    const int nm = modeset_.count();
    dual_.resize(static_cast<std::size_t>(nm));
    prefactor_.resize(static_cast<std::size_t>(nm));
    for (int i = 0; i < nm; ++i) {
        const ModeIndex mode = modeset_.at(i);
        dual_[static_cast<std::size_t>(i)] = mode.dual().flat() - 1;
        prefactor_[static_cast<std::size_t>(i)] =
            sign_factor(mode.m) / std::sqrt(4.0 * pi * med_.k * mode.n * (mode.n + 1.0));
    }
}

void ModeBank::eval(WaveType c, Vec3 p, Workspace& ws, std::span<ComplexVec3> out) const {
    const int nm = modeset_.count();
    if (out.size() != static_cast<std::size_t>(nm))
        throw std::invalid_argument("ModeBank::eval: output span size mismatch");

    const SphericalFrame f = spherical_frame(p, origin_);
    const double x = med_.k * f.r;
    const int n_max = modeset_.n_max;

    ws.legendre.compute(n_max, f.cos_t, f.sin_t);
    ws.z.resize(static_cast<std::size_t>(n_max) + 1);
    ws.dz.resize(static_cast<std::size_t>(n_max) + 1);
    radial_all(c, n_max, x, ws.z, ws.dz);
    ws.azimuth.resize(static_cast<std::size_t>(n_max) + 1);
    ws.azimuth[0] = 1.0;
    const cplx e1{std::cos(f.phi), std::sin(f.phi)};
    for (int m = 1; m <= n_max; ++m) ws.azimuth[m] = ws.azimuth[m - 1] * e1;

    for (int i = 0; i < nm; ++i) {
        const ModeIndex mode = modeset_.at(i);
        const int am = std::abs(mode.m);
        const cplx phase = (mode.m >= 0) ? ws.azimuth[am] : std::conj(ws.azimuth[am]);
        const cplx pre = prefactor_[static_cast<std::size_t>(i)] * phase;

        const double mos = (mode.m == 0) ? 0.0
                                         : (mode.m > 0 ? ws.legendre.m_over_sin(am, mode.n)
                                                       : -ws.legendre.m_over_sin(am, mode.n));
        const double tau = ws.legendre.d_theta(am, mode.n);

        cplx Fr{}, Ft{}, Fp{};
        if (mode.s == 1) {
            const cplx zr = ws.z[mode.n];
            Ft = cplx{0.0, 1.0} * mos * zr;
            Fp = -tau * zr;
        } else {
            Fr = (mode.n * (mode.n + 1.0) / x) * ws.z[mode.n] * ws.legendre.pbar(am, mode.n);
            Ft = tau * ws.dz[mode.n];
            Fp = cplx{0.0, 1.0} * mos * ws.dz[mode.n];
        }
        Fr *= pre;
        Ft *= pre;
        Fp *= pre;
        out[static_cast<std::size_t>(i)] = {
            Fr * f.e_r.x + Ft * f.e_t.x + Fp * f.e_p.x,
            Fr * f.e_r.y + Ft * f.e_t.y + Fp * f.e_p.y,
            Fr * f.e_r.z + Ft * f.e_t.z + Fp * f.e_p.z,
            VecBasis::cartesian};
    }
}

ComplexVec3 eval_F(WaveType c, ModeIndex mode, const Medium& med, Vec3 p, Vec3 origin) {
    mode.validate();
    med.validate();
    const SphericalFrame f = spherical_frame(p, origin);
    const double x = med.k * f.r;

    LegendreChains leg;
    leg.compute(mode.n, f.cos_t, f.sin_t);
    const RadialValue rad = radial_fn(c, mode.n, x);

    const int am = std::abs(mode.m);
    const cplx phase{std::cos(mode.m * f.phi), std::sin(mode.m * f.phi)};
    const cplx pre = sign_factor(mode.m) / std::sqrt(4.0 * pi * med.k * mode.n * (mode.n + 1.0)) * phase;
    const double mos = (mode.m == 0) ? 0.0
                                     : (mode.m > 0 ? leg.m_over_sin(am, mode.n)
                                                   : -leg.m_over_sin(am, mode.n));
    const double tau = leg.d_theta(am, mode.n);

    ComplexVec3 v{0.0, 0.0, 0.0, VecBasis::spherical};
    if (mode.s == 1) {
        v.y = cplx{0.0, 1.0} * mos * rad.value;
        v.z = -tau * rad.value;
    } else {
        v.x = (mode.n * (mode.n + 1.0) / x) * rad.value * leg.pbar(am, mode.n);
        v.y = tau * rad.d_xz_over_x;
        v.z = cplx{0.0, 1.0} * mos * rad.d_xz_over_x;
    }
    return pre * v;
}

ComplexVec3 eval_curl_F(WaveType c, ModeIndex mode, const Medium& med, Vec3 p, Vec3 origin) {
    return med.k * eval_F(c, mode.dual(), med, p, origin);
}

ComplexVec3 mode_farfield(ModeIndex mode, const Medium& med, double theta, double phi) {
    mode.validate();
    med.validate();
    LegendreChains leg;
    leg.compute(mode.n, std::cos(theta), std::abs(std::sin(theta)));

    const int am = std::abs(mode.m);
    const cplx phase{std::cos(mode.m * phi), std::sin(mode.m * phi)};
    const cplx pre = sign_factor(mode.m) / std::sqrt(4.0 * pi * med.k * mode.n * (mode.n + 1.0)) * phase;
    const double mos = (mode.m == 0) ? 0.0
                                     : (mode.m > 0 ? leg.m_over_sin(am, mode.n)
                                                   : -leg.m_over_sin(am, mode.n));
    const double tau = leg.d_theta(am, mode.n);

    // h_n^(2)(x) -> j^{n+1} e^{-jx}/x and {x h_n^(2)}'/x -> j^n e^{-jx}/x.
    const cplx jn = [&] {
        switch (mode.n % 4) {
            case 0: return cplx{1.0, 0.0};
            case 1: return cplx{0.0, 1.0};
            case 2: return cplx{-1.0, 0.0};
            default: return cplx{0.0, -1.0};
        }
    }();
    ComplexVec3 v{0.0, 0.0, 0.0, VecBasis::spherical};
    if (mode.s == 1) {
        const cplx amp = jn * cplx{0.0, 1.0};  // j^{n+1}
        v.y = amp * cplx{0.0, 1.0} * mos;
        v.z = -amp * tau;
    } else {
        v.y = jn * tau;
        v.z = jn * cplx{0.0, 1.0} * mos;
    }
    return pre * v;
}

}  // namespace swfde
