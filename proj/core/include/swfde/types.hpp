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

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace swfde {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double speed_of_light = 299792458.0;      // m/s
inline constexpr double vacuum_permeability = 4e-7 * pi;   // H/m
inline constexpr double vacuum_impedance = vacuum_permeability * speed_of_light;  // ohm

// ---------------------------------------------------------------------------
// Real 3-vector (positions, normals). Always Cartesian.
// ---------------------------------------------------------------------------
struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double a) const { return {a * x, a * y, a * z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    bool operator==(const Vec3&) const = default;

    [[nodiscard]] double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    [[nodiscard]] Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    [[nodiscard]] double norm() const { return std::sqrt(dot(*this)); }
    [[nodiscard]] Vec3 normalized() const {
        const double n = norm();
        if (n == 0.0) throw std::domain_error("Vec3::normalized: zero vector");
        return {x / n, y / n, z / n};
    }
};
inline Vec3 operator*(double a, const Vec3& v) { return v * a; }

// ---------------------------------------------------------------------------
// Complex field vector with an explicit basis tag. The spherical basis is
// (r^, theta^, phi^) at the evaluation point; components map x->r, y->theta,
// z->phi in that case.
// ---------------------------------------------------------------------------
enum class VecBasis { cartesian, spherical };

struct ComplexVec3 {
    cplx x{}, y{}, z{};
    VecBasis basis = VecBasis::cartesian;

    ComplexVec3 operator+(const ComplexVec3& o) const { return {x + o.x, y + o.y, z + o.z, basis}; }
    ComplexVec3 operator-(const ComplexVec3& o) const { return {x - o.x, y - o.y, z - o.z, basis}; }
    ComplexVec3 operator*(const cplx& a) const { return {a * x, a * y, a * z, basis}; }

    [[nodiscard]] ComplexVec3 conj() const { return {std::conj(x), std::conj(y), std::conj(z), basis}; }
    [[nodiscard]] double norm() const {
        return std::sqrt(std::norm(x) + std::norm(y) + std::norm(z));
    }
};
inline ComplexVec3 operator*(const cplx& a, const ComplexVec3& v) { return v * a; }

inline cplx dot(const ComplexVec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline cplx dot(const ComplexVec3& a, const ComplexVec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}
inline ComplexVec3 cross(const ComplexVec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x, a.basis};
}
inline ComplexVec3 cross(const ComplexVec3& a, const ComplexVec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x, a.basis};
}
inline ComplexVec3 cross(const Vec3& a, const ComplexVec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x, b.basis};
}

// Basis change at a point with polar angle theta and azimuth phi.
// Involutive: cartesian_to_spherical(spherical_to_cartesian(v)) == v.
inline ComplexVec3 spherical_to_cartesian(const ComplexVec3& v, double theta, double phi) {
    if (v.basis != VecBasis::spherical)
        throw std::invalid_argument("spherical_to_cartesian: vector is not in the spherical basis");
    const double st = std::sin(theta), ct = std::cos(theta);
    const double sp = std::sin(phi), cp = std::cos(phi);
    return {v.x * st * cp + v.y * ct * cp - v.z * sp,
            v.x * st * sp + v.y * ct * sp + v.z * cp,
            v.x * ct - v.y * st,
            VecBasis::cartesian};
}

inline ComplexVec3 cartesian_to_spherical(const ComplexVec3& v, double theta, double phi) {
    if (v.basis != VecBasis::cartesian)
        throw std::invalid_argument("cartesian_to_spherical: vector is not in the Cartesian basis");
    const double st = std::sin(theta), ct = std::cos(theta);
    const double sp = std::sin(phi), cp = std::cos(phi);
    return {v.x * st * cp + v.y * st * sp + v.z * ct,
            v.x * ct * cp + v.y * ct * sp - v.z * st,
            -v.x * sp + v.y * cp,
            VecBasis::spherical};
}

// ---------------------------------------------------------------------------
// Propagation medium. Time convention e^{+j w t} throughout: outgoing waves
// carry e^{-jkr}, curl E = -j k eta H, curl H = +j (k/eta) E.
// ---------------------------------------------------------------------------
struct Medium {
    double frequency = 0.0;  // Hz
    double k = 0.0;          // wavenumber, rad/m
    double eta = 0.0;        // wave impedance, ohm

    static Medium free_space(double frequency_hz) {
        if (frequency_hz <= 0.0) throw std::domain_error("Medium::free_space: frequency must be > 0");
        return {frequency_hz, 2.0 * pi * frequency_hz / speed_of_light, vacuum_impedance};
    }
    void validate() const {
        if (!(k > 0.0) || !(eta > 0.0)) throw std::domain_error("Medium: require k > 0 and eta > 0");
    }
};

}  // namespace swfde
