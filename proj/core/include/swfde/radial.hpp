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

#include "swfde/modes.hpp"
#include "swfde/types.hpp"

namespace swfde {

// Spherical Bessel functions of the first and second kind, orders 0..n_max.
//
// j_n uses Miller's downward recurrence with on-the-fly rescaling and is
// normalized against j_0 / j_1 (whichever is larger), so it stays accurate
// both below and above the turning point n ~ x. y_n uses the upward
// recurrence, which is stable for all x > 0. Hankel values are assembled as
// h^(1,2) = j +- i y, keeping the small j-part exact at small arguments.
void spherical_jn_all(int n_max, double x, std::span<double> out);
void spherical_yn_all(int n_max, double x, std::span<double> out);

// Radial factor pair of a spherical wave: the function value z_n(x) and the
// derivative combination {x z_n(x)}'/x that multiplies the theta/phi parts of
// the TM-type waves.
struct RadialValue {
    cplx value{};
    cplx d_xz_over_x{};
};

// z_n^{(c)}(x) with c = 1 -> j_n, 3 -> h_n^(1), 4 -> h_n^(2).
// Preconditions: x > 0 for c in {3,4} (singular at 0), x >= 0 for c = 1.
RadialValue radial_fn(WaveType c, int n, double x);

// Batched variant for n = 0..n_max; value[i] = z_i(x), aux[i] = {x z_i}'/x.
void radial_all(WaveType c, int n_max, double x, std::span<cplx> value, std::span<cplx> aux);

}  // namespace swfde
