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

#include "swfde/radial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace swfde {

void spherical_jn_all(int n_max, double x, std::span<double> out) {
    if (n_max < 0) throw std::domain_error("spherical_jn_all: n_max < 0");
    if (x < 0.0) throw std::domain_error("spherical_jn_all: x < 0");
    if (out.size() < static_cast<std::size_t>(n_max + 1))
        throw std::invalid_argument("spherical_jn_all: output span too small");

    if (x == 0.0) {
        out[0] = 1.0;
        for (int n = 1; n <= n_max; ++n) out[n] = 0.0;
        return;
    }

    const double j0 = std::sin(x) / x;
    if (n_max == 0) {
        out[0] = j0;
        return;
    }
    const double j1 = std::sin(x) / (x * x) - std::cos(x) / x;

    if (x >= 2.0 * n_max + 10.0) {
        // Far above the turning point the upward recurrence is stable.
        out[0] = j0;
        out[1] = j1;
        for (int n = 1; n < n_max; ++n) out[n + 1] = (2.0 * n + 1.0) / x * out[n] - out[n - 1];
        return;
    }

    // Downward (Miller) recurrence from a start order safely above both the
    // requested order and the turning point, rescaled to avoid overflow.
    const int start = std::max(n_max, static_cast<int>(std::ceil(x))) + 20;
    std::vector<double> f(static_cast<std::size_t>(start) + 2);
    f[start + 1] = 0.0;
    f[start] = std::numeric_limits<double>::min() * 1e16;
    for (int n = start; n >= 1; --n) {
        f[n - 1] = (2.0 * n + 1.0) / x * f[n] - f[n + 1];
        if (std::abs(f[n - 1]) > 1e250) {
            for (int i = n - 1; i <= start + 1; ++i) f[i] *= 1e-250;
        }
    }
    // Anchor on whichever of j0/j1 is farther from a zero.
    const double scale = (std::abs(j0) >= std::abs(j1)) ? j0 / f[0] : j1 / f[1];
    for (int n = 0; n <= n_max; ++n) out[n] = f[n] * scale;
}

void spherical_yn_all(int n_max, double x, std::span<double> out) {
    if (n_max < 0) throw std::domain_error("spherical_yn_all: n_max < 0");
    if (x <= 0.0) throw std::domain_error("spherical_yn_all: x must be > 0");
    if (out.size() < static_cast<std::size_t>(n_max + 1))
        throw std::invalid_argument("spherical_yn_all: output span too small");

    out[0] = -std::cos(x) / x;
    if (n_max == 0) return;
    out[1] = -std::cos(x) / (x * x) - std::sin(x) / x;
    for (int n = 1; n < n_max; ++n) out[n + 1] = (2.0 * n + 1.0) / x * out[n] - out[n - 1];
}

void radial_all(WaveType c, int n_max, double x, std::span<cplx> value, std::span<cplx> aux) {
    if (value.size() < static_cast<std::size_t>(n_max + 1) ||
        aux.size() < static_cast<std::size_t>(n_max + 1))
        throw std::invalid_argument("radial_all: output spans too small");
    if (c != WaveType::regular && x <= 0.0)
        throw std::domain_error("radial_all: singular wave type evaluated at x <= 0");
    if (x < 0.0) throw std::domain_error("radial_all: x < 0");

    if (x == 0.0) {  // regular only; limits of j_n and {x j_n}'/x
        value[0] = 1.0;
        aux[0] = std::numeric_limits<double>::quiet_NaN();  // {x j_0}'/x -> 1/x, n = 0 unused by modes
        for (int n = 1; n <= n_max; ++n) {
            value[n] = 0.0;
            aux[n] = (n == 1) ? 2.0 / 3.0 : 0.0;
        }
        return;
    }

    std::vector<double> jn(static_cast<std::size_t>(n_max) + 1);
    spherical_jn_all(n_max, x, jn);
    if (c == WaveType::regular) {
        for (int n = 0; n <= n_max; ++n) value[n] = jn[n];
    } else {
        std::vector<double> yn(static_cast<std::size_t>(n_max) + 1);
        spherical_yn_all(n_max, x, yn);
        const double sign = (c == WaveType::incoming) ? +1.0 : -1.0;  // h^(1) = j + iy, h^(2) = j - iy
        for (int n = 0; n <= n_max; ++n) value[n] = {jn[n], sign * yn[n]};
    }

    // {x z_n}'/x = z_{n-1} - n z_n / x;  order 0 from the closed forms.
    switch (c) {
        case WaveType::regular:  aux[0] = std::cos(x) / x; break;
        case WaveType::incoming: aux[0] = cplx{std::cos(x), std::sin(x)} / x; break;
        case WaveType::outgoing: aux[0] = cplx{std::cos(x), -std::sin(x)} / x; break;
    }
    for (int n = 1; n <= n_max; ++n) aux[n] = value[n - 1] - static_cast<double>(n) * value[n] / x;
}

RadialValue radial_fn(WaveType c, int n, double x) {
    if (n < 0) throw std::domain_error("radial_fn: n < 0");
    std::vector<cplx> v(static_cast<std::size_t>(n) + 1), a(static_cast<std::size_t>(n) + 1);
    radial_all(c, n, x, v, a);
    return {v[static_cast<std::size_t>(n)], a[static_cast<std::size_t>(n)]};
}

}  // namespace swfde
