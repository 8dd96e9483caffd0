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

#include "swfde/io.hpp"

#include <bit>
#include <cinttypes>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <random>
#include <sstream>

static_assert(std::endian::native == std::endian::little,
              "NFD1 binary block assumes a little-endian host");
static_assert(sizeof(double) == 8, "NFD1 binary block assumes IEEE-754 binary64");

namespace swfde {

namespace {

constexpr int kFloatsPerSample = 19;
constexpr const char* kFieldOrder =
    "x y z nx ny nz w ReEx ImEx ReEy ImEy ReEz ImEz ReHx ImHx ReHy ImHy ReHz ImHz";

[[noreturn]] void parse_fail(const std::filesystem::path& path, const std::string& msg) {
    throw io_format_error(path.string() + ": " + msg);
}

double parse_double(const std::string& s, const std::filesystem::path& path, const char* what) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str()) parse_fail(path, std::string("cannot parse ") + what + " from '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string format_box(const BoxSpec& b) {
    std::ostringstream os;
    os << "box center=" << format_double(b.center.x) << ',' << format_double(b.center.y) << ','
       << format_double(b.center.z) << " half_extents=" << format_double(b.half_extents.x) << ','
       << format_double(b.half_extents.y) << ',' << format_double(b.half_extents.z) << " cells=";
    for (int axis = 0; axis < 3; ++axis)
        for (int c = 0; c < 2; ++c) {
            os << b.cells_per_face[static_cast<std::size_t>(axis)][static_cast<std::size_t>(c)];
            if (axis != 2 || c != 1) os << ',';
        }
    return os.str();
}

std::optional<BoxSpec> parse_box(const std::string& v, const std::filesystem::path& path) {
    if (v == "external") return std::nullopt;
    if (v.rfind("box ", 0) != 0) parse_fail(path, "unrecognized mesh provenance '" + v + "'");
    BoxSpec spec;
    std::istringstream is(v.substr(4));
    std::string tok;
    while (is >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) parse_fail(path, "bad mesh token '" + tok + "'");
        const std::string key = tok.substr(0, eq);
        const auto vals = split(tok.substr(eq + 1), ',');
        if (key == "center" && vals.size() == 3) {
            spec.center = {parse_double(vals[0], path, "center"),
                           parse_double(vals[1], path, "center"),
                           parse_double(vals[2], path, "center")};
        } else if (key == "half_extents" && vals.size() == 3) {
            spec.half_extents = {parse_double(vals[0], path, "half_extents"),
                                 parse_double(vals[1], path, "half_extents"),
                                 parse_double(vals[2], path, "half_extents")};
        } else if (key == "cells" && vals.size() == 6) {
            for (int i = 0; i < 6; ++i)
                spec.cells_per_face[static_cast<std::size_t>(i / 2)][static_cast<std::size_t>(i % 2)] =
                    static_cast<int>(parse_double(vals[static_cast<std::size_t>(i)], path, "cells"));
        } else {
            parse_fail(path, "bad mesh key '" + key + "'");
        }
    }
    return spec;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void atomic_write(const std::filesystem::path& path, const std::string& contents) {
    namespace fs = std::filesystem;
    const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
    std::mt19937_64 rng(std::random_device{}());
    fs::path tmp;
    std::ofstream out;
    for (int attempt = 0; attempt < 16; ++attempt) {
        tmp = dir / (path.filename().string() + ".tmp" + std::to_string(rng() & 0xffffff));
        if (fs::exists(tmp)) continue;
        out.open(tmp, std::ios::binary | std::ios::trunc);
        if (out.is_open()) break;
    }
    if (!out.is_open()) throw std::runtime_error("atomic_write: cannot create temp file near " + path.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.close();
    if (!out) {
        fs::remove(tmp);
        throw std::runtime_error("atomic_write: short write to " + tmp.string());
    }
    fs::rename(tmp, path);
}

// ---------------------------------------------------------------------------
// NFD1
// ---------------------------------------------------------------------------

void write_nfd(const std::filesystem::path& path, const NfdFile& file) {
    file.trace.validate();
    std::ostringstream os;
    os << "NFD1\n";
    os << "frequency_hz: " << format_double(file.trace.frequency) << '\n';
    os << "sample_count: " << file.trace.mesh.size() << '\n';
    os << "mesh: " << (file.provenance ? format_box(*file.provenance) : std::string("external"))
       << '\n';
    os << "field_order: " << kFieldOrder << '\n';
    for (const auto& [k, v] : file.extra_keys) os << k << ": " << v << '\n';
    os << "---\n";

    std::string body = os.str();
    const std::size_t header_size = body.size();
    body.resize(header_size + file.trace.mesh.size() * kFloatsPerSample * sizeof(double));
    double* p = reinterpret_cast<double*>(body.data() + header_size);
    for (std::size_t i = 0; i < file.trace.mesh.size(); ++i) {
        const auto& s = file.trace.mesh.samples[i];
        const auto& E = file.trace.E[i];
        const auto& H = file.trace.H[i];
        const double rec[kFloatsPerSample] = {
            s.position.x, s.position.y, s.position.z, s.normal.x,  s.normal.y,  s.normal.z,
            s.weight,     E.x.real(),   E.x.imag(),   E.y.real(),  E.y.imag(),  E.z.real(),
            E.z.imag(),   H.x.real(),   H.x.imag(),   H.y.real(),  H.y.imag(),  H.z.real(),
            H.z.imag()};
        std::memcpy(p + i * kFloatsPerSample, rec, sizeof rec);
    }
    atomic_write(path, body);
}

NfdFile read_nfd(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) parse_fail(path, "cannot open");

    std::string line;
    if (!std::getline(in, line) || line != "NFD1")
        parse_fail(path, "magic tag mismatch: expected first line 'NFD1'");

    NfdFile file;
    std::optional<double> freq;
    std::optional<std::size_t> count;
    bool terminated = false;
    while (std::getline(in, line)) {
        if (line == "---") {
            terminated = true;
            break;
        }
        const auto colon = line.find(": ");
        if (colon == std::string::npos) parse_fail(path, "malformed header line '" + line + "'");
        const std::string key = line.substr(0, colon);
        const std::string value = line.substr(colon + 2);
        if (key == "frequency_hz") {
            freq = parse_double(value, path, "frequency_hz");
        } else if (key == "sample_count") {
            count = static_cast<std::size_t>(std::stoull(value));
        } else if (key == "mesh") {
            file.provenance = parse_box(value, path);
        } else if (key == "field_order") {
            if (value != kFieldOrder) parse_fail(path, "unsupported field_order declaration");
        } else {
            file.extra_keys.emplace_back(key, value);  // tolerant reader
        }
    }
    if (!terminated) parse_fail(path, "header not terminated by '---'");
    if (!freq) parse_fail(path, "missing frequency_hz");
    if (!count) parse_fail(path, "missing sample_count");

    const std::streamoff data_start = in.tellg();
    const std::size_t expected = *count * kFloatsPerSample * sizeof(double);
    std::string blob(expected, '\0');
    in.read(blob.data(), static_cast<std::streamsize>(expected));
    const std::size_t got = static_cast<std::size_t>(in.gcount());
    if (got != expected)
        parse_fail(path, "binary block truncated: expected " + std::to_string(expected) +
                             " bytes, got " + std::to_string(got));
    char extra;
    if (in.read(&extra, 1))
        parse_fail(path, "binary block longer than declared: expected " + std::to_string(expected) +
                             " bytes");

    file.trace.frequency = *freq;
    file.trace.mesh.samples.resize(*count);
    file.trace.E.resize(*count);
    file.trace.H.resize(*count);
    const double* p = reinterpret_cast<const double*>(blob.data());
    for (std::size_t i = 0; i < *count; ++i) {
        const double* r = p + i * kFloatsPerSample;
        for (int f = 0; f < kFloatsPerSample; ++f) {
            if (!std::isfinite(r[f]))
                parse_fail(path, "non-finite value at byte offset " +
                                     std::to_string(static_cast<std::size_t>(data_start) +
                                                    (i * kFloatsPerSample +
                                                     static_cast<std::size_t>(f)) *
                                                        sizeof(double)));
        }
        auto& s = file.trace.mesh.samples[i];
        s.position = {r[0], r[1], r[2]};
        s.normal = {r[3], r[4], r[5]};
        s.weight = r[6];
        file.trace.E[i] = {{r[7], r[8]}, {r[9], r[10]}, {r[11], r[12]}, VecBasis::cartesian};
        file.trace.H[i] = {{r[13], r[14]}, {r[15], r[16]}, {r[17], r[18]}, VecBasis::cartesian};
    }
    return file;
}

// ---------------------------------------------------------------------------
// Coefficient CSV
// ---------------------------------------------------------------------------

void write_coefficients(const std::filesystem::path& path, const CoefficientSet& coeffs) {
    coeffs.validate();
    std::ostringstream os;
    os << "# kind: " << to_string(coeffs.kind) << '\n';
    os << "# frequency_hz: " << format_double(coeffs.medium.frequency) << '\n';
    os << "# k: " << format_double(coeffs.medium.k) << '\n';
    os << "# eta: " << format_double(coeffs.medium.eta) << '\n';
    os << "# n_max: " << coeffs.modeset.n_max << '\n';
    os << "j,s,m,n,re,im\n";
    for (int i = 0; i < coeffs.modeset.count(); ++i) {
        const ModeIndex mode = coeffs.modeset.at(i);
        const cplx v = coeffs.values[static_cast<std::size_t>(i)];
        os << (i + 1) << ',' << mode.s << ',' << mode.m << ',' << mode.n << ','
           << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
    }
    atomic_write(path, os.str());
}

CoefficientSet read_coefficients(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) parse_fail(path, "cannot open");
    CoefficientSet out;
    std::string kind_str;
    int n_max = 0;
    std::string line;
    bool header_seen = false;
    int expected_j = 1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto colon = line.find(": ");
            if (colon == std::string::npos) continue;
            const std::string key = line.substr(2, colon - 2);
            const std::string value = line.substr(colon + 2);
            if (key == "kind") kind_str = value;
            else if (key == "frequency_hz") out.medium.frequency = parse_double(value, path, "frequency");
            else if (key == "k") out.medium.k = parse_double(value, path, "k");
            else if (key == "eta") out.medium.eta = parse_double(value, path, "eta");
            else if (key == "n_max") n_max = static_cast<int>(std::stol(value));
            continue;
        }
        if (!header_seen) {
            if (line != "j,s,m,n,re,im") parse_fail(path, "bad column header '" + line + "'");
            header_seen = true;
            continue;
        }
        const auto cols = split(line, ',');
        if (cols.size() != 6) parse_fail(path, "bad row '" + line + "'");
        const int j = static_cast<int>(std::stol(cols[0]));
        if (j != expected_j)
            parse_fail(path, "j values must be contiguous from 1: expected " +
                                 std::to_string(expected_j) + ", got " + std::to_string(j));
        const ModeIndex mode = smn_from_j(j);
        if (mode.s != std::stol(cols[1]) || mode.m != std::stol(cols[2]) ||
            mode.n != std::stol(cols[3]))
            parse_fail(path, "row " + std::to_string(j) + ": (s,m,n) does not match j");
        out.values.emplace_back(parse_double(cols[4], path, "re"), parse_double(cols[5], path, "im"));
        ++expected_j;
    }
    if (n_max < 1) parse_fail(path, "missing or invalid n_max");
    out.modeset = ModeSet(n_max);
    if (static_cast<int>(out.values.size()) != out.modeset.count())
        parse_fail(path, "expected " + std::to_string(out.modeset.count()) + " rows, got " +
                             std::to_string(out.values.size()));
    if (kind_str == "b") out.kind = CoefficientKind::outgoing;
    else if (kind_str == "a") out.kind = CoefficientKind::incoming;
    else if (kind_str == "bprime") out.kind = CoefficientKind::radiating;
    else parse_fail(path, "missing or invalid kind '" + kind_str + "'");
    return out;
}

// ---------------------------------------------------------------------------
// Channel matrix CSV
// ---------------------------------------------------------------------------

namespace {

std::string format_cplx_token(const cplx& v) {
    std::string s = format_double(v.real());
    const std::string im = format_double(v.imag());
    if (!im.empty() && im[0] != '-') s += '+';
    s += im;
    s += 'j';
    return s;
}

cplx parse_cplx_token(const std::string& tok, const std::filesystem::path& path) {
    if (tok.empty() || tok.back() != 'j') parse_fail(path, "bad complex token '" + tok + "'");
    const char* c = tok.c_str();
    char* end = nullptr;
    const double re = std::strtod(c, &end);
    if (end == c) parse_fail(path, "bad complex token '" + tok + "'");
    const char* imn = end;
    char* end2 = nullptr;
    const double im = std::strtod(imn, &end2);
    if (end2 == imn || *end2 != 'j') parse_fail(path, "bad complex token '" + tok + "'");
    return {re, im};
}

}  // namespace

void write_channel_matrix(const std::filesystem::path& path, const ChannelMatrix& m) {
    m.validate();
    std::ostringstream os;
    os << "N=" << m.size() << ",role=" << (m.role == ChannelMatrix::Role::full ? "M" : "M11")
       << '\n';
    for (int r = 0; r < m.size(); ++r) {
        for (int c = 0; c < m.size(); ++c) {
            if (c) os << ',';
            os << format_cplx_token(m.entries(r, c));
        }
        os << '\n';
    }
    atomic_write(path, os.str());
}

ChannelMatrix read_channel_matrix(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) parse_fail(path, "cannot open");
    std::string line;
    if (!std::getline(in, line)) parse_fail(path, "empty file");
    int n = 0;
    ChannelMatrix m;
    {
        const auto parts = split(line, ',');
        if (parts.size() != 2 || parts[0].rfind("N=", 0) != 0 || parts[1].rfind("role=", 0) != 0)
            parse_fail(path, "bad first line '" + line + "'");
        n = static_cast<int>(std::stol(parts[0].substr(2)));
        const std::string role = parts[1].substr(5);
        if (role == "M") m.role = ChannelMatrix::Role::full;
        else if (role == "M11") m.role = ChannelMatrix::Role::self_reflection;
        else parse_fail(path, "bad role '" + role + "'");
    }
    if (n < 1) parse_fail(path, "bad dimension");
    m.entries.resize(n, n);
    for (int r = 0; r < n; ++r) {
        if (!std::getline(in, line)) parse_fail(path, "expected " + std::to_string(n) + " rows");
        const auto toks = split(line, ',');
        if (static_cast<int>(toks.size()) != n)
            parse_fail(path, "row " + std::to_string(r) + ": expected " + std::to_string(n) +
                                 " entries, got " + std::to_string(toks.size()));
        for (int c = 0; c < n; ++c)
            m.entries(r, c) = parse_cplx_token(toks[static_cast<std::size_t>(c)], path);
    }
    return m;
}

// ---------------------------------------------------------------------------
// Far-field CSV
// ---------------------------------------------------------------------------

void write_farfield(const std::filesystem::path& path, const FarFieldPattern& pattern) {
    std::ostringstream os;
    os << "theta_deg,phi_deg,re_Etheta,im_Etheta,re_Ephi,im_Ephi\n";
    for (std::size_t row = 0; row < pattern.grid.size(); ++row) {
        os << format_double(pattern.theta_at(row)) << ',' << format_double(pattern.phi_at(row))
           << ',' << format_double(pattern.e_theta[row].real()) << ','
           << format_double(pattern.e_theta[row].imag()) << ','
           << format_double(pattern.e_phi[row].real()) << ','
           << format_double(pattern.e_phi[row].imag()) << '\n';
    }
    atomic_write(path, os.str());
}

void write_farfield_dbi(const std::filesystem::path& path, const FarFieldPattern& pattern,
                        const std::vector<double>& dbi) {
    if (dbi.size() != pattern.grid.size())
        throw std::invalid_argument("write_farfield_dbi: dBi rows must match the grid");
    std::ostringstream os;
    os << "theta_deg,phi_deg,D_dBi\n";
    for (std::size_t row = 0; row < pattern.grid.size(); ++row)
        os << format_double(pattern.theta_at(row)) << ',' << format_double(pattern.phi_at(row))
           << ',' << format_double(dbi[row]) << '\n';
    atomic_write(path, os.str());
}

FarFieldPattern read_farfield(const std::filesystem::path& path, const Medium& med) {
    std::ifstream in(path);
    if (!in) parse_fail(path, "cannot open");
    std::string line;
    if (!std::getline(in, line) || line != "theta_deg,phi_deg,re_Etheta,im_Etheta,re_Ephi,im_Ephi")
        parse_fail(path, "unsupported far-field header");
    FarFieldPattern p;
    p.medium = med;
    std::vector<double> thetas, phis;
    std::vector<cplx> et, ep;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cols = split(line, ',');
        if (cols.size() != 6) parse_fail(path, "bad row '" + line + "'");
        thetas.push_back(parse_double(cols[0], path, "theta"));
        phis.push_back(parse_double(cols[1], path, "phi"));
        et.emplace_back(parse_double(cols[2], path, "re_Etheta"), parse_double(cols[3], path, "im_Etheta"));
        ep.emplace_back(parse_double(cols[4], path, "re_Ephi"), parse_double(cols[5], path, "im_Ephi"));
    }
    // Recover the grid: unique sorted angle lists; the row order must be
    // theta-major, phi-minor.
    for (double t : thetas)
        if (p.grid.theta_deg.empty() || t > p.grid.theta_deg.back()) p.grid.theta_deg.push_back(t);
    for (std::size_t i = 0; i < phis.size() && (p.grid.phi_deg.empty() || phis[i] > p.grid.phi_deg.back());
         ++i)
        p.grid.phi_deg.push_back(phis[i]);
    if (p.grid.size() != thetas.size()) parse_fail(path, "rows do not form a sorted (theta, phi) grid");
    for (std::size_t row = 0; row < thetas.size(); ++row)
        if (thetas[row] != p.theta_at(row) || phis[row] != p.phi_at(row))
            parse_fail(path, "rows are not sorted by (theta, phi)");
    p.e_theta = std::move(et);
    p.e_phi = std::move(ep);
    return p;
}

}  // namespace swfde
