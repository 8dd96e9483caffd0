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

#include "swfde/types.hpp"

namespace swfde {

// Normalized associated Legendre functions (Ferrers, no Condon-Shortley
// phase), orthonormal on [-1, 1]:
//
//   Pbar_n^m(u) = sqrt( (2n+1)/2 * (n-m)! / (n+m)! ) * P_n^m(u),  0 <= m <= n.
//
// The vector spherical waves need Pbar together with the two angular
// auxiliaries  m Pbar / sin(theta)  and  d Pbar / d theta.  All three are
// produced by recurrences on the sin-scaled functions Q = Pbar / sin(theta)
// for m >= 1, so nothing is ever divided by sin(theta) and the poles come out
// as exact limits.
struct LegendreNorm {
    double value = 0.0;       // Pbar_n^m(u)
    double d_theta = 0.0;     // d Pbar / d theta
    double m_over_sin = 0.0;  // m Pbar / sin(theta), finite limit at the poles
};

// Single-entry evaluation; sin(theta) is taken as the non-negative branch
// sqrt(1 - u^2). Preconditions: 0 <= m <= n, |u| <= 1.
LegendreNorm legendre_norm(int n, int m, double u);

// All orders and degrees up to n_max at one angle, for the evaluator hot
// path. cos_t/sin_t are passed separately so callers with exact geometry
// (sin theta = rho / r) keep full precision near the poles.
class LegendreChains {
  public:
    void compute(int n_max, double cos_t, double sin_t);

    [[nodiscard]] double pbar(int m, int n) const { return pbar_[idx(m, n)]; }
    [[nodiscard]] double m_over_sin(int m, int n) const { return mos_[idx(m, n)]; }
    [[nodiscard]] double d_theta(int m, int n) const { return tau_[idx(m, n)]; }
    [[nodiscard]] int n_max() const { return n_max_; }

  private:
    [[nodiscard]] std::size_t idx(int m, int n) const {
        return static_cast<std::size_t>(m) * static_cast<std::size_t>(n_max_ + 1) +
               static_cast<std::size_t>(n);
    }
    int n_max_ = -1;
    std::vector<double> pbar_, mos_, tau_;
};

}  // namespace swfde
