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
#include "swfde/modes.hpp"

#include <vector>

using namespace swfde;

namespace {

// Independent oracle: enumerate the (n, m, s) triples in ascending order and
// index them 1, 2, 3, ...
std::vector<ModeIndex> enumerate_modes(int n_max) {
    std::vector<ModeIndex> out;
    for (int n = 1; n <= n_max; ++n)
        for (int m = -n; m <= n; ++m)
            for (int s = 1; s <= 2; ++s) out.push_back({s, m, n});
    return out;
}

}  // namespace

TEST_CASE("flat index matches the enumeration oracle") {
    const auto modes = enumerate_modes(10);
    for (std::size_t i = 0; i < modes.size(); ++i) {
        const int j = static_cast<int>(i) + 1;
        CHECK(modes[i].flat() == j);
        CHECK(ModeIndex::from_flat(j) == modes[i]);
    }
}

TEST_CASE("documented single values") {
    CHECK(j_from_smn(1, -1, 1) == 1);
    CHECK(j_from_smn(2, 1, 1) == 6);
    CHECK(smn_from_j(1) == ModeIndex{1, -1, 1});
    CHECK(smn_from_j(6) == ModeIndex{2, 1, 1});
}

TEST_CASE("round trip over j = 1..100") {
    for (int j = 1; j <= 100; ++j) CHECK(smn_from_j(j).flat() == j);
}

TEST_CASE("mode counts per truncation") {
    CHECK(ModeSet(4).count() == 48);
    // per-degree share 2(2n+1): 6, 10, 14, 18
    int prev = 0;
    std::vector<int> expected{6, 10, 14, 18};
    for (int n = 1; n <= 4; ++n) {
        const int cnt = ModeSet(n).count();
        CHECK(cnt - prev == expected[static_cast<std::size_t>(n - 1)]);
        prev = cnt;
    }
}

TEST_CASE("flat ordering is strictly increasing in (n, m, s)") {
    const auto modes = enumerate_modes(6);
    for (std::size_t i = 1; i < modes.size(); ++i)
        CHECK(modes[i].flat() == modes[i - 1].flat() + 1);
}

TEST_CASE("invalid triples are rejected") {
    CHECK_THROWS_AS(j_from_smn(0, 0, 1), std::domain_error);
    CHECK_THROWS_AS(j_from_smn(3, 0, 1), std::domain_error);
    CHECK_THROWS_AS(j_from_smn(1, 2, 1), std::domain_error);
    CHECK_THROWS_AS(j_from_smn(1, 0, 0), std::domain_error);
    CHECK_THROWS_AS(smn_from_j(0), std::domain_error);
    CHECK_THROWS_AS(ModeSet(0), std::domain_error);
}

TEST_CASE("dual flips the polarization only") {
    for (int j = 1; j <= 48; ++j) {
        const ModeIndex mode = smn_from_j(j);
        const ModeIndex d = mode.dual();
        CHECK(d.s == 3 - mode.s);
        CHECK(d.m == mode.m);
        CHECK(d.n == mode.n);
        CHECK(d.dual() == mode);
    }
}
