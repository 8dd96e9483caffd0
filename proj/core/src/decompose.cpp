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

#include "swfde/decompose.hpp"

#include <algorithm>
#include <limits>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "swfde/parallel.hpp"

namespace swfde {

namespace {

constexpr std::size_t kReductionBlock = 2048;

void check_preconditions(const FieldTrace& trace, const Medium& med, Vec3 origin) {
    trace.validate();
    med.validate();
    if (trace.frequency > 0.0 &&
        std::abs(trace.frequency - med.frequency) > 1e-12 * med.frequency)
        throw std::domain_error("decompose: trace frequency does not match the medium");
    if (trace.mesh.winding_number(origin) < 0.5)
        throw std::domain_error("decompose: expansion origin is not enclosed by the trace surface");
}

// Per-mode quadrature sums over the trace for one wave type, blocked and
// order-fixed (see header).
std::vector<cplx> inner_products_all(const FieldTrace& trace, const ModeBank& bank, WaveType c) {
    const std::size_t nm = static_cast<std::size_t>(bank.count());
    const std::size_t nblocks = block_count(trace.mesh.size(), kReductionBlock);
    std::vector<cplx> partials(nblocks * nm);
    const Medium& med = bank.medium();
    const cplx minus_jkEta{0.0, -med.k * med.eta};

    parallel_blocks(trace.mesh.size(), kReductionBlock,
                    [&](std::size_t bi, std::size_t begin, std::size_t end) {
                        ModeBank::Workspace ws;
                        std::vector<ComplexVec3> v(nm);
                        std::vector<cplx> acc(nm, cplx{});
                        for (std::size_t i = begin; i < end; ++i) {
                            const auto& s = trace.mesh.samples[i];
                            bank.eval(c, s.position, ws, v);
                            // curl E = -j k eta H, fixed; F* enters conjugated
                            const ComplexVec3 curlE_x_n =
                                cross(minus_jkEta * trace.H[i], s.normal);
                            for (std::size_t m = 0; m < nm; ++m) {
                                const ComplexVec3 curlF_conj_x_n =
                                    cross(med.k * v[static_cast<std::size_t>(
                                                      bank.dual_position(static_cast<int>(m)))]
                                              .conj(),
                                          s.normal);
                                const cplx term = dot(trace.E[i], curlF_conj_x_n) -
                                                  dot(v[m].conj(), curlE_x_n);
                                acc[m] += s.weight * term;
                            }
                        }
                        for (std::size_t m = 0; m < nm; ++m) partials[bi * nm + m] = acc[m];
                    });

    std::vector<cplx> out(nm, cplx{});
    for (std::size_t bi = 0; bi < nblocks; ++bi)
        for (std::size_t m = 0; m < nm; ++m) out[m] += partials[bi * nm + m];
    return out;
}

CoefficientSet decompose_with(const FieldTrace& trace, ModeSet modeset, const Medium& med,
                              Vec3 origin, WaveType c, CoefficientKind kind, const cplx& prefactor) {
    check_preconditions(trace, med, origin);
    const ModeBank bank(modeset, med, origin);
    CoefficientSet out;
    out.kind = kind;
    out.modeset = modeset;
    out.medium = med;
    out.values = inner_products_all(trace, bank, c);
    for (auto& v : out.values) v *= prefactor;
    return out;
}

// Two orthonormal tangents per normal, deterministically chosen.
std::pair<Vec3, Vec3> tangent_frame(Vec3 n) {
    const Vec3 seed = (std::abs(n.x) < 0.9) ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
    const Vec3 t1 = n.cross(seed).normalized();
    return {t1, n.cross(t1)};
}

}  // namespace

cplx inner_product_field_mode(const FieldTrace& trace, ModeIndex mode, WaveType c,
                              const Medium& med, Vec3 origin) {
    mode.validate();
    check_preconditions(trace, med, origin);
    const cplx minus_jkEta{0.0, -med.k * med.eta};
    // Fixed-order blocked reduction, single mode.
    const std::size_t nblocks = block_count(trace.mesh.size(), kReductionBlock);
    std::vector<cplx> partials(nblocks, cplx{});
    parallel_blocks(trace.mesh.size(), kReductionBlock,
                    [&](std::size_t bi, std::size_t begin, std::size_t end) {
                        cplx acc{};
                        for (std::size_t i = begin; i < end; ++i) {
                            const auto& s = trace.mesh.samples[i];
                            const Vec3 d = s.position - origin;
                            const double theta =
                                std::acos(std::clamp(d.z / d.norm(), -1.0, 1.0));
                            const double phi = std::atan2(d.y, d.x);
                            const ComplexVec3 F = spherical_to_cartesian(
                                eval_F(c, mode, med, s.position, origin), theta, phi);
                            const ComplexVec3 curlF_conj = (med.k * spherical_to_cartesian(
                                eval_F(c, mode.dual(), med, s.position, origin), theta, phi)).conj();
                            const cplx term =
                                dot(trace.E[i], cross(curlF_conj, s.normal)) -
                                dot(F.conj(), cross(minus_jkEta * trace.H[i], s.normal));
                            acc += s.weight * term;
                        }
                        partials[bi] = acc;
                    });
    cplx total{};
    for (const cplx& p : partials) total += p;
    return total;
}

CoefficientSet decompose_outgoing(const FieldTrace& trace, ModeSet modeset, const Medium& med,
                                  Vec3 origin) {
    const cplx pref = med.k / (cplx{0.0, 1.0} * std::sqrt(med.eta));
    return decompose_with(trace, modeset, med, origin, WaveType::outgoing,
                          CoefficientKind::outgoing, pref);
}

CoefficientSet decompose_incoming(const FieldTrace& trace, ModeSet modeset, const Medium& med,
                                  Vec3 origin) {
    const cplx pref = -med.k / (cplx{0.0, 1.0} * std::sqrt(med.eta));
    return decompose_with(trace, modeset, med, origin, WaveType::incoming,
                          CoefficientKind::incoming, pref);
}

CoefficientSet decompose_radiating(const FieldTrace& trace, ModeSet modeset, const Medium& med,
                                   Vec3 origin) {
    const cplx pref = 2.0 * med.k / (cplx{0.0, 1.0} * std::sqrt(med.eta));
    return decompose_with(trace, modeset, med, origin, WaveType::regular,
                          CoefficientKind::radiating, pref);
}

namespace {

// Rows: 2 tangential components per sample, scaled by sqrt(weight) so the
// discrete fit approximates the continuous surface L2 norm. Columns: modes of
// each requested wave type, grouped per type in flat order.
Eigen::MatrixXcd build_design_matrix(const SurfaceMesh& mesh, ModeSet modeset, const Medium& med,
                                     Vec3 origin, std::span<const WaveType> basis) {
    if (basis.empty()) throw std::domain_error("least squares: empty wave-type basis");
    const std::size_t nm = static_cast<std::size_t>(modeset.count());
    const std::size_t rows = 2 * mesh.size();
    const std::size_t cols = nm * basis.size();
    if (rows < cols)
        throw std::domain_error("least squares: fewer tangential equations than unknowns");
    Eigen::MatrixXcd A(rows, cols);
    const ModeBank bank(modeset, med, origin);
    const cplx e_scale = med.k * std::sqrt(med.eta);

    parallel_blocks(mesh.size(), kReductionBlock,
                    [&](std::size_t, std::size_t begin, std::size_t end) {
                        ModeBank::Workspace ws;
                        std::vector<ComplexVec3> v(nm);
                        for (std::size_t i = begin; i < end; ++i) {
                            const auto& s = mesh.samples[i];
                            const auto [t1, t2] = tangent_frame(s.normal);
                            const double sw = std::sqrt(s.weight);
                            for (std::size_t bidx = 0; bidx < basis.size(); ++bidx) {
                                bank.eval(basis[bidx], s.position, ws, v);
                                for (std::size_t m = 0; m < nm; ++m) {
                                    const cplx val_t1 = e_scale * dot(v[m], t1) * sw;
                                    const cplx val_t2 = e_scale * dot(v[m], t2) * sw;
                                    A(static_cast<Eigen::Index>(2 * i),
                                      static_cast<Eigen::Index>(bidx * nm + m)) = val_t1;
                                    A(static_cast<Eigen::Index>(2 * i + 1),
                                      static_cast<Eigen::Index>(bidx * nm + m)) = val_t2;
                                }
                            }
                        }
                    });
    return A;
}

}  // namespace

LeastSquaresResult decompose_leastsquares(const FieldTrace& trace, ModeSet modeset,
                                          const Medium& med, Vec3 origin,
                                          std::span<const WaveType> basis) {
    check_preconditions(trace, med, origin);
    const Eigen::MatrixXcd A = build_design_matrix(trace.mesh, modeset, med, origin, basis);

    Eigen::VectorXcd rhs(A.rows());
    for (std::size_t i = 0; i < trace.mesh.size(); ++i) {
        const auto& s = trace.mesh.samples[i];
        const auto [t1, t2] = tangent_frame(s.normal);
        const double sw = std::sqrt(s.weight);
        rhs(static_cast<Eigen::Index>(2 * i)) = dot(trace.E[i], t1) * sw;
        rhs(static_cast<Eigen::Index>(2 * i + 1)) = dot(trace.E[i], t2) * sw;
    }

    Eigen::BDCSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double sv_max = sv(0);
    const double sv_min = sv(sv.size() - 1);
    const double rank_tol = std::numeric_limits<double>::epsilon() *
                            static_cast<double>(std::max(A.rows(), A.cols())) * sv_max;

    LeastSquaresResult res;
    res.condition_number = (sv_min > 0.0) ? sv_max / sv_min
                                          : std::numeric_limits<double>::infinity();
    res.rank_deficient = !(sv_min > rank_tol);
    // SVD solve drops singular values below Eigen's default threshold, giving
    // the minimum-norm solution for rank-deficient systems instead of a crash.
    const Eigen::VectorXcd x = svd.solve(rhs);

    const double rhs_norm = rhs.norm();
    res.relative_residual = (rhs_norm > 0.0) ? (A * x - rhs).norm() / rhs_norm : 0.0;

    const std::size_t nm = static_cast<std::size_t>(modeset.count());
    for (std::size_t bidx = 0; bidx < basis.size(); ++bidx) {
        CoefficientSet set;
        switch (basis[bidx]) {
            case WaveType::outgoing: set.kind = CoefficientKind::outgoing; break;
            case WaveType::incoming: set.kind = CoefficientKind::incoming; break;
            case WaveType::regular: set.kind = CoefficientKind::radiating; break;
        }
        set.modeset = modeset;
        set.medium = med;
        set.values.resize(nm);
        for (std::size_t m = 0; m < nm; ++m)
            set.values[m] = x(static_cast<Eigen::Index>(bidx * nm + m));
        res.coefficients.push_back(std::move(set));
    }
    return res;
}

ConditionReport condition_report(const SurfaceMesh& mesh, ModeSet modeset, const Medium& med,
                                 Vec3 origin, std::span<const WaveType> basis) {
    med.validate();
    const Eigen::MatrixXcd A = build_design_matrix(mesh, modeset, med, origin, basis);
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(A);
    const auto& sv = svd.singularValues();
    ConditionReport rep;
    rep.sv_max = sv(0);
    rep.sv_min = sv(sv.size() - 1);
    rep.condition_number = (rep.sv_min > 0.0) ? rep.sv_max / rep.sv_min
                                              : std::numeric_limits<double>::infinity();
    rep.singular_values.assign(sv.data(), sv.data() + sv.size());
    return rep;
}

}  // namespace swfde
