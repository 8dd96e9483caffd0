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

#include "swfde/equivalence.hpp"

#include <sstream>

namespace swfde {

namespace {

Eigen::VectorXcd solve_checked(const Eigen::MatrixXcd& A, const Eigen::VectorXcd& rhs,
                               const char* what) {
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(A);
    const double rcond = lu.rcond();
    if (!lu.isInvertible() || !(rcond > 1e-14)) {
        std::ostringstream msg;
        msg << what << ": system matrix is singular or ill-conditioned (rcond = " << rcond << ")";
        throw std::runtime_error(msg.str());
    }
    return lu.solve(rhs);
}

void require_same_modeset(const CoefficientSet& x, const CoefficientSet& y, const char* what) {
    if (!(x.modeset == y.modeset)) {
        std::ostringstream msg;
        msg << what << ": modeset mismatch (n_max " << x.modeset.n_max << " vs " << y.modeset.n_max
            << ")";
        throw std::domain_error(msg.str());
    }
}

}  // namespace

void SignalFlowModel::validate() const {
    m11.validate();
    const int n = m11.size();
    if (transmission.size() != n)
        throw std::domain_error("SignalFlowModel: T length must match M11");
    if (antenna_scattering.rows() != n || antenna_scattering.cols() != n)
        throw std::domain_error("SignalFlowModel: S must be N x N");
    if (receiving.size() != 0 && receiving.size() != n)
        throw std::domain_error("SignalFlowModel: R length must match M11 when present");
}

std::pair<CoefficientSet, CoefficientSet> equivalent_source(EquivalenceCase c,
                                                            const CoefficientSet& b,
                                                            const CoefficientSet& a) {
    b.validate();
    a.validate();
    require_same_modeset(b, a, "equivalent_source");

    CoefficientSet bp = b;
    bp.kind = CoefficientKind::radiating;
    CoefficientSet ap = a;
    ap.kind = CoefficientKind::incoming;
    switch (c) {
        case EquivalenceCase::love:
            for (auto& v : ap.values) v = -v;
            break;
        case EquivalenceCase::naive_outgoing:
            for (auto& v : ap.values) v = 0.0;
            break;
        case EquivalenceCase::outgoing_corrected:
            for (std::size_t i = 0; i < bp.values.size(); ++i) bp.values[i] -= a.values[i];
            for (auto& v : ap.values) v = 0.0;
            break;
    }
    return {std::move(bp), std::move(ap)};
}

FlowSolution solve_original_flow(const SignalFlowModel& model) {
    model.validate();
    const int n = model.m11.size();
    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(n, n);
    const Eigen::MatrixXcd sys = I - model.antenna_scattering * model.m11.entries;

    FlowSolution sol;
    sol.b = solve_checked(sys, model.transmission * model.port_wave, "solve_original_flow");
    sol.a = model.m11.entries * sol.b;
    if (model.receiving.size() == n) sol.received_wave = model.receiving.transpose() * sol.a;
    return sol;
}

EquivalentFlowSolution solve_equivalent_flow(const CoefficientSet& b_prime,
                                             const CoefficientSet& a_prime,
                                             const ChannelMatrix& m11) {
    b_prime.validate();
    a_prime.validate();
    require_same_modeset(b_prime, a_prime, "solve_equivalent_flow");
    m11.validate();
    const int n = m11.size();
    if (n != b_prime.modeset.count())
        throw std::domain_error("solve_equivalent_flow: M11 dimension mismatch");

    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(n, n);
    const Eigen::VectorXcd rhs = to_eigen(b_prime) - to_eigen(a_prime);
    const Eigen::VectorXcd b_hat = solve_checked(I - m11.entries, rhs, "solve_equivalent_flow");

    EquivalentFlowSolution out;
    out.b_hat = from_eigen(b_hat, CoefficientKind::outgoing, b_prime.modeset, b_prime.medium);
    out.a_hat =
        from_eigen(m11.entries * b_hat, CoefficientKind::incoming, b_prime.modeset, b_prime.medium);
    return out;
}

CoefficientSet apply_channel(const ChannelMatrix& m, const CoefficientSet& b_t) {
    m.validate();
    b_t.validate();
    if (m.size() != b_t.modeset.count())
        throw std::domain_error("apply_channel: matrix dimension does not match the coefficients");
    return from_eigen(m.entries * to_eigen(b_t), CoefficientKind::incoming, b_t.modeset,
                      b_t.medium);
}

SurfaceCurrents love_currents(const FieldTrace& trace) {
    trace.validate();
    SurfaceCurrents out;
    out.electric.reserve(trace.mesh.size());
    out.magnetic.reserve(trace.mesh.size());
    for (std::size_t i = 0; i < trace.mesh.size(); ++i) {
        const Vec3 n = trace.mesh.samples[i].normal;
        out.electric.push_back(cross(n, trace.H[i]));        // J = n x H
        out.magnetic.push_back(-1.0 * cross(n, trace.E[i])); // M = -n x E
    }
    return out;
}

Eigen::VectorXcd to_eigen(const CoefficientSet& c) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(c.values.size()));
    for (std::size_t i = 0; i < c.values.size(); ++i) v(static_cast<Eigen::Index>(i)) = c.values[i];
    return v;
}

CoefficientSet from_eigen(const Eigen::VectorXcd& v, CoefficientKind kind, ModeSet modeset,
                          const Medium& med) {
    if (v.size() != modeset.count())
        throw std::domain_error("from_eigen: length must equal modeset.count()");
    CoefficientSet out;
    out.kind = kind;
    out.modeset = modeset;
    out.medium = med;
    out.values.assign(v.data(), v.data() + v.size());
    return out;
}

}  // namespace swfde
