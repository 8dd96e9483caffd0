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

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swfde/equivalence.hpp"
#include "swfde/farfield.hpp"
#include "swfde/trace.hpp"

namespace swfde {

// Malformed input file (bad magic, truncated block, non-contiguous rows...).
// Distinct from numerical failures so callers can map it to a usage-style
// exit code.
struct io_format_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ===========================================================================
// NFD1 near-field dump.
//
// UTF-8 "key: value" header terminated by a line "---", then a little-endian
// binary block of 64-bit floats, 19 per sample:
//   x y z nx ny nz w ReEx ImEx ReEy ImEy ReEz ImEz ReHx ImHx ReHy ImHy ReHz ImHz
// The first header line is the magic "NFD1". Unknown keys are preserved on a
// round trip (tolerant reader).
// ===========================================================================
struct NfdFile {
    FieldTrace trace;
    std::optional<BoxSpec> provenance;  // box the mesh was built from, if any
    std::vector<std::pair<std::string, std::string>> extra_keys;
};

void write_nfd(const std::filesystem::path& path, const NfdFile& file);
NfdFile read_nfd(const std::filesystem::path& path);

// ===========================================================================
// Coefficient CSV: '#'-prefixed metadata (kind, frequency, k, eta, n_max),
// header row "j,s,m,n,re,im", then one row per mode with contiguous j.
// ===========================================================================
void write_coefficients(const std::filesystem::path& path, const CoefficientSet& coeffs);
CoefficientSet read_coefficients(const std::filesystem::path& path);

// ===========================================================================
// Channel matrix CSV: first line "N=<count>,role=<M|M11>", then N lines of N
// "re+imj" tokens (row-major).
// ===========================================================================
void write_channel_matrix(const std::filesystem::path& path, const ChannelMatrix& m);
ChannelMatrix read_channel_matrix(const std::filesystem::path& path);

// ===========================================================================
// Far-field CSV. Complex form:
//   theta_deg,phi_deg,re_Etheta,im_Etheta,re_Ephi,im_Ephi
// or directivity form:
//   theta_deg,phi_deg,D_dBi
// Rows sorted by (theta, phi), which the pattern layout already guarantees.
// ===========================================================================
void write_farfield(const std::filesystem::path& path, const FarFieldPattern& pattern);
void write_farfield_dbi(const std::filesystem::path& path, const FarFieldPattern& pattern,
                        const std::vector<double>& dbi);
FarFieldPattern read_farfield(const std::filesystem::path& path, const Medium& med);

// Atomic text/binary write: temp file in the target directory, then rename.
void atomic_write(const std::filesystem::path& path, const std::string& contents);

// Round-trip-exact double formatting ("%.17g").
std::string format_double(double v);

}  // namespace swfde
