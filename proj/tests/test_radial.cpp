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

#include "doctest.h"
#include "swfde/radial.hpp"

#include <cmath>
#include <vector>

using namespace swfde;

namespace {

// Closed forms used as the oracle.
double j0_ref(double x) { return std::sin(x) / x; }
double j1_ref(double x) { return std::sin(x) / (x * x) - std::cos(x) / x; }
double j2_ref(double x) { return (3.0 / (x * x * x) - 1.0 / x) * std::sin(x) - 3.0 * std::cos(x) / (x * x); }
double y0_ref(double x) { return -std::cos(x) / x; }
double y1_ref(double x) { return -std::cos(x) / (x * x) - std::sin(x) / x; }

const std::vector<double> sample_x{0.05, 0.1, 0.5, 1.0, 2.5, 3.14159, 6.3, 10.0, 31.4, 100.0};

}  // namespace

TEST_CASE("low orders match the closed forms") {
    for (double x : sample_x) {
        CHECK(radial_fn(WaveType::regular, 0, x).value.real() == doctest::Approx(j0_ref(x)).epsilon(1e-13));
        CHECK(radial_fn(WaveType::regular, 1, x).value.real() == doctest::Approx(j1_ref(x)).epsilon(1e-13));
        CHECK(radial_fn(WaveType::regular, 2, x).value.real() == doctest::Approx(j2_ref(x)).epsilon(1e-12));
        const auto h1 = radial_fn(WaveType::incoming, 1, x).value;
        CHECK(h1.real() == doctest::Approx(j1_ref(x)).epsilon(1e-13));
        CHECK(h1.imag() == doctest::Approx(y1_ref(x)).epsilon(1e-13));
        const auto h2 = radial_fn(WaveType::outgoing, 0, x).value;
        CHECK(h2.real() == doctest::Approx(j0_ref(x)).epsilon(1e-13));
        CHECK(h2.imag() == doctest::Approx(-y0_ref(x)).epsilon(1e-13));
    }
}

TEST_CASE("frozen values at x = 1") {
    // j_1(1) = sin 1 - cos 1 and h_1^(2)(1) = j_1(1) - i y_1(1)
    const auto j1 = radial_fn(WaveType::regular, 1, 1.0).value;
    CHECK(j1.real() == doctest::Approx(0.3011687).epsilon(1e-6));
    CHECK(j1.imag() == 0.0);
    const auto h2 = radial_fn(WaveType::outgoing, 1, 1.0).value;
    CHECK(h2.real() == doctest::Approx(0.3011687).epsilon(1e-6));
    CHECK(h2.imag() == doctest::Approx(1.3817733).epsilon(1e-6));
}

TEST_CASE("regular values are purely real") {
    for (double x : sample_x)
        for (int n = 0; n <= 20; ++n) CHECK(radial_fn(WaveType::regular, n, x).value.imag() == 0.0);
}

TEST_CASE("cross-kind Wronskian j_n y_n' - y_n j_n' = 1/x^2 up to n = 20") {
    // Strong stability probe over the whole contract domain: the Wronskian
    // couples values and derivative auxiliaries of both recurrence paths.
    for (double x : sample_x) {
        for (int n = 0; n <= 20; ++n) {
            const auto j = radial_fn(WaveType::regular, n, x);
            const auto h1 = radial_fn(WaveType::incoming, n, x);
            const cplx y = (h1.value - j.value) / cplx{0.0, 1.0};
            const cplx dy = (h1.d_xz_over_x - j.d_xz_over_x) / cplx{0.0, 1.0};
            // z' = {x z}'/x - z/x
            const cplx jp = j.d_xz_over_x - j.value / x;
            const cplx yp = dy - y / x;
            const cplx w = j.value * yp - y * jp;
            CHECK(std::abs(w - 1.0 / (x * x)) <= 1e-10 / (x * x));
        }
    }
}

TEST_CASE("derivative auxiliary matches finite differences of x z(x)") {
    const double h = 1e-6;
    for (double x : {0.7, 3.3, 15.0}) {
        for (int n = 1; n <= 12; ++n) {
            for (WaveType c : {WaveType::regular, WaveType::incoming, WaveType::outgoing}) {
                const cplx fd = ((x + h) * radial_fn(c, n, x + h).value -
                                 (x - h) * radial_fn(c, n, x - h).value) /
                                (2.0 * h * x);
                const cplx got = radial_fn(c, n, x).d_xz_over_x;
                CHECK(std::abs(fd - got) <= 1e-5 * std::max(1.0, std::abs(got)));
            }
        }
    }
}

TEST_CASE("singular types reject x = 0, regular handles it") {
    CHECK_THROWS_AS(radial_fn(WaveType::incoming, 1, 0.0), std::domain_error);
    CHECK_THROWS_AS(radial_fn(WaveType::outgoing, 1, 0.0), std::domain_error);
    CHECK(radial_fn(WaveType::regular, 0, 0.0).value == cplx{1.0, 0.0});
    CHECK(radial_fn(WaveType::regular, 3, 0.0).value == cplx{0.0, 0.0});
    CHECK(radial_fn(WaveType::regular, 1, 0.0).d_xz_over_x == cplx{2.0 / 3.0, 0.0});
}

TEST_CASE("tiny arguments stay finite and accurate") {
    // j_1(x)/x -> 1/3; downward recurrence must not over/underflow.
    const double x = 1e-6;
    const auto j1 = radial_fn(WaveType::regular, 1, x).value;
    CHECK(j1.real() / x == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    const auto j10 = radial_fn(WaveType::regular, 10, x).value;
    CHECK(std::isfinite(j10.real()));
    CHECK(j10.real() >= 0.0);
}
