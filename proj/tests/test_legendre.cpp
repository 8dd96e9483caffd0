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
#include "swfde/legendre.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <vector>

using namespace swfde;

namespace {

// Explicit low-order polynomial oracle: Pbar_n^m = N_n^m P_n^m with
// N_n^m = sqrt((2n+1)/2 (n-m)!/(n+m)!) and Ferrers P_n^m without the
// Condon-Shortley phase, s = sqrt(1-u^2).
double pbar_ref(int n, int m, double u) {
    const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
    auto N = [](int nn, int mm) {
        double f = 1.0;
        for (int i = nn - mm + 1; i <= nn + mm; ++i) f *= i;
        return std::sqrt((2.0 * nn + 1.0) / 2.0 / f);
    };
    double p = 0.0;
    if (n == 1 && m == 0) p = u;
    else if (n == 1 && m == 1) p = s;
    else if (n == 2 && m == 0) p = 0.5 * (3.0 * u * u - 1.0);
    else if (n == 2 && m == 1) p = 3.0 * u * s;
    else if (n == 2 && m == 2) p = 3.0 * s * s;
    else if (n == 3 && m == 0) p = 0.5 * (5.0 * u * u * u - 3.0 * u);
    else if (n == 3 && m == 1) p = 1.5 * (5.0 * u * u - 1.0) * s;
    else if (n == 3 && m == 2) p = 15.0 * u * s * s;
    else if (n == 3 && m == 3) p = 15.0 * s * s * s;
    else if (n == 4 && m == 0) p = 0.125 * (35.0 * u * u * u * u - 30.0 * u * u + 3.0);
    else if (n == 4 && m == 1) p = 2.5 * (7.0 * u * u * u - 3.0 * u) * s;
    else if (n == 4 && m == 2) p = 7.5 * (7.0 * u * u - 1.0) * s * s;
    else if (n == 4 && m == 3) p = 105.0 * u * s * s * s;
    else if (n == 4 && m == 4) p = 105.0 * s * s * s * s;
    else REQUIRE(false);
    return N(n, m) * p;
}

}  // namespace

TEST_CASE("values match the explicit polynomial oracle up to n = 4") {
    std::mt19937 rng(123);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> us{-1.0, -0.99999, 0.0, 0.5, 0.99999, 1.0};
    for (int i = 0; i < 40; ++i) us.push_back(dist(rng));
    for (double u : us)
        for (int n = 1; n <= 4; ++n)
            for (int m = 0; m <= n; ++m)
                CHECK(legendre_norm(n, m, u).value ==
                      doctest::Approx(pbar_ref(n, m, u)).epsilon(1e-12).scale(1.0));
}

TEST_CASE("documented pole values for n = 1") {
    // Pbar_1^0(1) = sqrt(3/2), Pbar_1^1(0) = sqrt(3)/2
    CHECK(legendre_norm(1, 0, 1.0).value == doctest::Approx(std::sqrt(1.5)).epsilon(1e-15));
    CHECK(legendre_norm(1, 1, 0.0).value == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));
}

TEST_CASE("odd (n - m) parity vanishes at u = 0") {
    for (int n = 1; n <= 8; ++n)
        for (int m = 0; m <= n; ++m)
            if ((n - m) % 2 != 0) CHECK(std::abs(legendre_norm(n, m, 0.0).value) < 1e-15);
}

TEST_CASE("theta derivative matches central differences") {
    for (double th : {0.3, 1.0, 2.0, 2.9}) {
        const double h = 1e-6;
        for (int n = 1; n <= 8; ++n) {
            for (int m = 0; m <= n; ++m) {
                const double fd = (legendre_norm(n, m, std::cos(th + h)).value -
                                   legendre_norm(n, m, std::cos(th - h)).value) /
                                  (2.0 * h);
                CHECK(legendre_norm(n, m, std::cos(th)).d_theta ==
                      doctest::Approx(fd).epsilon(1e-6).scale(1.0));
            }
        }
    }
}

TEST_CASE("m/sin auxiliary equals the plain ratio away from the poles") {
    for (double th : {0.2, 1.3, 2.7}) {
        const double u = std::cos(th), s = std::sin(th);
        for (int n = 1; n <= 8; ++n)
            for (int m = 1; m <= n; ++m) {
                const auto r = legendre_norm(n, m, u);
                CHECK(r.m_over_sin == doctest::Approx(m * r.value / s).epsilon(1e-12));
            }
    }
}

TEST_CASE("pole limits are finite and continuous") {
    // Only m = 1 survives in m Pbar/sin at the poles; approach with shrinking
    // theta and compare against the exact pole evaluation.
    for (int n = 1; n <= 6; ++n) {
        const double exact = legendre_norm(n, 1, 1.0).m_over_sin;
        const double near = legendre_norm(n, 1, std::cos(1e-7)).m_over_sin;
        CHECK(std::isfinite(exact));
        CHECK(exact == doctest::Approx(near).epsilon(1e-8));
        for (int m = 2; m <= n; ++m) {
            CHECK(legendre_norm(n, m, 1.0).m_over_sin == 0.0);
            CHECK(legendre_norm(n, m, -1.0).m_over_sin == 0.0);
        }
        CHECK(legendre_norm(n, 1, 1.0).value == 0.0);
    }
}

TEST_CASE("orthonormality on [-1,1] by Gauss quadrature") {
    // 64-point Gauss-Legendre is exact for the polynomial integrands here.
    const int q = 64;
    std::vector<double> xs(q), ws(q);
    for (int i = 0; i < q; ++i) {  // Newton on P_q
        double x = std::cos(pi * (i + 0.75) / (q + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= q; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double dp = q * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= q; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        const double dp = q * (x * p1 - p0) / (x * x - 1.0);
        xs[static_cast<std::size_t>(i)] = x;
        ws[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    for (int m = 0; m <= 3; ++m) {
        for (int n1 = std::max(1, m); n1 <= 5; ++n1) {
            for (int n2 = std::max(1, m); n2 <= 5; ++n2) {
                double acc = 0.0;
                for (int i = 0; i < q; ++i)
                    acc += ws[static_cast<std::size_t>(i)] *
                           legendre_norm(n1, m, xs[static_cast<std::size_t>(i)]).value *
                           legendre_norm(n2, m, xs[static_cast<std::size_t>(i)]).value;
                CHECK(acc == doctest::Approx(n1 == n2 ? 1.0 : 0.0).epsilon(1e-12).scale(1.0));
            }
        }
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(legendre_norm(1, 2, 0.0), std::domain_error);
    CHECK_THROWS_AS(legendre_norm(0, 0, 0.0), std::domain_error);
    CHECK_THROWS_AS(legendre_norm(1, 0, 1.5), std::domain_error);
}
