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

#include <stdexcept>
#include <string>

#include "swfde/types.hpp"

namespace swfde {

// ---------------------------------------------------------------------------
// Radial behaviour selector of a spherical wave function.
// Under e^{+jwt}: regular -> j_n (standing), incoming -> h_n^(1),
// outgoing -> h_n^(2).
// ---------------------------------------------------------------------------
enum class WaveType : int { regular = 1, incoming = 3, outgoing = 4 };

inline WaveType wave_type_from_int(int c) {
    if (c != 1 && c != 3 && c != 4) throw std::domain_error("WaveType: c must be 1, 3 or 4");
    return static_cast<WaveType>(c);
}

// ---------------------------------------------------------------------------
// Mode triple (s, m, n) and its flat index
//
//   j = 2 (n (n+1) + m - 1) + s
//
// which enumerates modes by ascending (n, m, s). s = 1 is the TE-type
// polarization (no radial E), s = 2 the TM-type.
// ---------------------------------------------------------------------------
struct ModeIndex {
    int s = 1;  // polarization, 1 or 2
    int m = 0;  // azimuthal index, -n..n
    int n = 1;  // degree, >= 1

    bool operator==(const ModeIndex&) const = default;

    void validate() const {
        if (s != 1 && s != 2) throw std::domain_error("ModeIndex: s must be 1 or 2");
        if (n < 1) throw std::domain_error("ModeIndex: n must be >= 1");
        if (m < -n || m > n) throw std::domain_error("ModeIndex: require |m| <= n");
    }

    [[nodiscard]] int flat() const {
        validate();
        return 2 * (n * (n + 1) + m - 1) + s;
    }

    // Curl partner: same (m, n), opposite polarization.
    [[nodiscard]] ModeIndex dual() const { return {3 - s, m, n}; }

    static ModeIndex from_flat(int j) {
        if (j < 1) throw std::domain_error("ModeIndex::from_flat: j must be >= 1");
        const int s = (j - 1) % 2 + 1;
        const int t = (j - s) / 2 + 1;  // n(n+1) + m, in [n^2, n^2 + 2n]
        int n = static_cast<int>(std::sqrt(static_cast<double>(t)));
        while (n * n > t) --n;
        while ((n + 1) * (n + 1) <= t) ++n;
        const int m = t - n * (n + 1);
        return {s, m, n};
    }

    [[nodiscard]] std::string str() const {
        return "(s=" + std::to_string(s) + ", m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")";
    }
};

inline int j_from_smn(int s, int m, int n) { return ModeIndex{s, m, n}.flat(); }
inline ModeIndex smn_from_j(int j) { return ModeIndex::from_flat(j); }

// ---------------------------------------------------------------------------
// Truncated mode collection: all modes with degree n <= n_max, in flat order.
// count = 2 n_max (n_max + 2); per-degree share is 2 (2n + 1).
// ---------------------------------------------------------------------------
struct ModeSet {
    int n_max = 1;

    explicit ModeSet(int n_max_) : n_max(n_max_) {
        if (n_max < 1) throw std::domain_error("ModeSet: n_max must be >= 1");
    }

    [[nodiscard]] int count() const { return 2 * n_max * (n_max + 2); }

    // 0-based position <-> mode; position i holds flat index j = i + 1.
    [[nodiscard]] ModeIndex at(int i) const {
        if (i < 0 || i >= count()) throw std::out_of_range("ModeSet::at");
        return ModeIndex::from_flat(i + 1);
    }

    bool operator==(const ModeSet&) const = default;
};

}  // namespace swfde
