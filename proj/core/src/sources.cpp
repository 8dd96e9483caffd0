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

#include "swfde/sources.hpp"

#include <cmath>

#include "swfde/swf.hpp"

namespace swfde {

namespace {

// Shared radial profile of the Hertzian dipole, u = kr:
//   longitudinal: 2 (R^.m) R^ (1/u^2 - j/u^3)
//   transverse:   (R^ (R^.m) - m) (j/u + 1/u^2 - j/u^3)
//   azimuthal:    (m x R^) (j/u + 1/u^2)
struct DipoleProfile {
    ComplexVec3 radial_part;   // before the kind-dependent prefactor
    ComplexVec3 circ_part;     // m x R^ term
};

DipoleProfile dipole_profile(const ComplexVec3& m, Vec3 rhat, double u) {
    const cplx ju{0.0, 1.0 / u};
    const cplx inv2 = 1.0 / (u * u);
    const cplx inv3{0.0, -1.0 / (u * u * u)};
    const cplx f1 = inv2 + inv3;                 // 1/u^2 - j/u^3
    const cplx f2 = ju + inv2 + inv3;            // j/u + 1/u^2 - j/u^3
    const cplx f3 = ju + inv2;                   // j/u + 1/u^2

    const cplx mdotR = dot(m, rhat);
    const ComplexVec3 mR{mdotR * rhat.x, mdotR * rhat.y, mdotR * rhat.z, VecBasis::cartesian};
    DipoleProfile out;
    out.radial_part = 2.0 * f1 * mR + f2 * (mR - m);
    out.circ_part = f3 * cross(m, rhat);
    return out;
}

}  // namespace

EHPair dipole_fields(const DipoleSource& src, const Medium& med, Vec3 p) {
    src.validate();
    med.validate();
    const Vec3 d = p - src.position;
    const double r = d.norm();
    if (r == 0.0) throw std::domain_error("dipole_fields: evaluation at the source point");
    const Vec3 rhat = d * (1.0 / r);
    const double u = med.k * r;
    const cplx carrier = std::exp(cplx{0.0, -u});
    const double c0 = med.k * med.k / (4.0 * pi);

    const DipoleProfile prof = dipole_profile(src.moment, rhat, u);
    EHPair out;
    if (src.kind == DipoleSource::Kind::electric) {
        out.E = (med.eta * c0 * carrier) * prof.radial_part;
        out.H = (c0 * carrier) * prof.circ_part;
    } else {
        out.H = (c0 / med.eta * carrier) * prof.radial_part;
        out.E = (-c0 * carrier) * prof.circ_part;
    }
    return out;
}

ComplexVec3 dipole_farfield(const DipoleSource& src, const Medium& med, double theta, double phi) {
    src.validate();
    med.validate();
    const double st = std::sin(theta);
    const Vec3 rhat{st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
    const cplx shift = std::exp(cplx{0.0, med.k * rhat.dot(src.position)});
    const cplx amp = cplx{0.0, -1.0} * med.k * med.k / (4.0 * pi) * shift;
    if (src.kind == DipoleSource::Kind::electric) {
        const cplx mdotR = dot(src.moment, rhat);
        const ComplexVec3 mperp = src.moment - ComplexVec3{mdotR * rhat.x, mdotR * rhat.y,
                                                           mdotR * rhat.z, VecBasis::cartesian};
        return (med.eta * amp) * mperp;
    }
    return amp * cross(src.moment, rhat);
}

double dipole_radiated_power(const DipoleSource& src, const Medium& med) {
    const double m2 = src.moment.norm() * src.moment.norm();
    const double base = med.k * med.k * m2 / (12.0 * pi);
    return (src.kind == DipoleSource::Kind::electric) ? med.eta * base : base / med.eta;
}

std::vector<EHPair> synthesize_from_coefficients(const CoefficientSet& b, const CoefficientSet& a,
                                                 const Medium& med, std::span<const Vec3> points,
                                                 Vec3 origin) {
    const bool has_b = !b.values.empty();
    const bool has_a = !a.values.empty();
    if (has_b) b.validate();
    if (has_a) a.validate();
    if (has_b && has_a && !(b.modeset == a.modeset))
        throw std::domain_error("synthesize_from_coefficients: modeset mismatch between b and a");
    med.validate();

    std::vector<EHPair> out(points.size());
    if (!has_b && !has_a) return out;
    const ModeSet ms = has_b ? b.modeset : a.modeset;
    const ModeBank bank(ms, med, origin);
    ModeBank::Workspace ws;
    std::vector<ComplexVec3> v(static_cast<std::size_t>(ms.count()));

    const cplx e_scale = med.k * std::sqrt(med.eta);
    const cplx h_scale = cplx{0.0, 1.0} * med.k / std::sqrt(med.eta);

    for (std::size_t ip = 0; ip < points.size(); ++ip) {
        ComplexVec3 E{}, H{};
        if (has_b) {
            bank.eval(WaveType::outgoing, points[ip], ws, v);
            for (int i = 0; i < ms.count(); ++i) {
                const cplx w = b.values[static_cast<std::size_t>(i)];
                E = E + w * v[static_cast<std::size_t>(i)];
                H = H + w * v[static_cast<std::size_t>(bank.dual_position(i))];
            }
        }
        if (has_a) {
            bank.eval(WaveType::incoming, points[ip], ws, v);
            for (int i = 0; i < ms.count(); ++i) {
                const cplx w = a.values[static_cast<std::size_t>(i)];
                E = E + w * v[static_cast<std::size_t>(i)];
                H = H + w * v[static_cast<std::size_t>(bank.dual_position(i))];
            }
        }
        out[ip].E = e_scale * E;
        out[ip].H = h_scale * H;
    }
    return out;
}

FieldTrace sample_scene_on_mesh(const Scene& scene, const SurfaceMesh& mesh) {
    scene.medium.validate();
    FieldTrace trace;
    trace.mesh = mesh;
    trace.frequency = scene.medium.frequency;
    trace.E.assign(mesh.size(), ComplexVec3{});
    trace.H.assign(mesh.size(), ComplexVec3{});
    for (const auto& src : scene.sources) {
        for (const auto& s : mesh.samples)
            if ((s.position - src.position).norm() == 0.0)
                throw std::domain_error("sample_scene_on_mesh: source lies on the mesh surface");
        for (std::size_t i = 0; i < mesh.size(); ++i) {
            const EHPair eh = dipole_fields(src, scene.medium, mesh.samples[i].position);
            trace.E[i] = trace.E[i] + eh.E;
            trace.H[i] = trace.H[i] + eh.H;
        }
    }
    return trace;
}

int truncation_order_suggestion(double kr_max) {
    if (!(kr_max > 0.0)) throw std::domain_error("truncation_order_suggestion: kr_max must be > 0");
    const int n = static_cast<int>(std::ceil(kr_max + 3.0 * std::cbrt(kr_max)));
    return std::max(n, 1);
}

}  // namespace swfde
