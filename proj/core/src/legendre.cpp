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

#include "swfde/legendre.hpp"

#include <cmath>
#include <stdexcept>

namespace swfde {

void LegendreChains::compute(int n_max, double cos_t, double sin_t) {
    if (n_max < 1) throw std::domain_error("LegendreChains: n_max must be >= 1");
    if (sin_t < 0.0) throw std::domain_error("LegendreChains: sin_t must be >= 0");
    const double u = cos_t;
    n_max_ = n_max;
    const std::size_t sz = static_cast<std::size_t>(n_max + 1) * static_cast<std::size_t>(n_max + 1);
    pbar_.assign(sz, 0.0);
    mos_.assign(sz, 0.0);
    tau_.assign(sz, 0.0);

    // m = 0 chain: plain Pbar.
    pbar_[idx(0, 0)] = std::sqrt(0.5);
    pbar_[idx(0, 1)] = std::sqrt(3.0) * u * pbar_[idx(0, 0)];
    for (int n = 2; n <= n_max; ++n) {
        const double a = std::sqrt((4.0 * n * n - 1.0) / (static_cast<double>(n) * n));
        const double b =
            std::sqrt((n - 1.0) * (n - 1.0) / (4.0 * (n - 1.0) * (n - 1.0) - 1.0));
        pbar_[idx(0, n)] = a * (u * pbar_[idx(0, n - 1)] - b * pbar_[idx(0, n - 2)]);
    }

    // m >= 1 chains on Q = Pbar / sin(theta); the three-term coefficients are
    // the same, only the diagonal seed carries the sin factor.
    std::vector<double> q(sz, 0.0);
    q[idx(1, 1)] = std::sqrt(3.0) / 2.0;
    for (int m = 2; m <= n_max; ++m)
        q[idx(m, m)] = std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * sin_t * q[idx(m - 1, m - 1)];
    for (int m = 1; m <= n_max; ++m) {
        if (m + 1 <= n_max) q[idx(m, m + 1)] = std::sqrt(2.0 * m + 3.0) * u * q[idx(m, m)];
        for (int n = m + 2; n <= n_max; ++n) {
            const double a = std::sqrt((4.0 * n * n - 1.0) / (static_cast<double>(n) * n - m * m));
            const double b = std::sqrt(((n - 1.0) * (n - 1.0) - m * m) /
                                       (4.0 * (n - 1.0) * (n - 1.0) - 1.0));
            q[idx(m, n)] = a * (u * q[idx(m, n - 1)] - b * q[idx(m, n - 2)]);
        }
    }

    for (int m = 1; m <= n_max; ++m) {
        for (int n = m; n <= n_max; ++n) {
            pbar_[idx(m, n)] = sin_t * q[idx(m, n)];
            mos_[idx(m, n)] = m * q[idx(m, n)];
            // d Pbar/d theta = n u Q_n^m - sqrt((n^2-m^2)(2n+1)/(2n-1)) Q_{n-1}^m
            double t = n * u * q[idx(m, n)];
            if (n > m) {
                const double c = std::sqrt((static_cast<double>(n) * n - m * m) * (2.0 * n + 1.0) /
                                           (2.0 * n - 1.0));
                t -= c * q[idx(m, n - 1)];
            }
            tau_[idx(m, n)] = t;
        }
    }
    // d Pbar_n^0/d theta = -sqrt(n(n+1)) Pbar_n^1, pole-exact.
    for (int n = 1; n <= n_max; ++n)
        tau_[idx(0, n)] = -std::sqrt(n * (n + 1.0)) * pbar_[idx(1, n)];
}

LegendreNorm legendre_norm(int n, int m, double u) {
    if (n < 1 || m < 0 || m > n) throw std::domain_error("legendre_norm: require 0 <= m <= n, n >= 1");
    if (u < -1.0 || u > 1.0) throw std::domain_error("legendre_norm: require |u| <= 1");
    LegendreChains ch;
    ch.compute(n, u, std::sqrt(std::max(0.0, (1.0 - u) * (1.0 + u))));
    return {ch.pbar(m, n), ch.d_theta(m, n), ch.m_over_sin(m, n)};
}

}  // namespace swfde
