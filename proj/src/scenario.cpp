// SPDX-License-Identifier: Apache-2.0
//
// irslink - link-level simulator for IRS-assisted multi-user MIMO uplinks
// Copyright (C) 2026 the irslink authors
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

#include "irslink/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace irslink {

SystemDims::SystemDims(int m_bs_, int n_irs_, int n_users_, int l_ut_,
                       int k_blocks_, int t_slots_, int i_frames_, int l_h_,
                       int l_g_)
    : m_bs(m_bs_), n_irs(n_irs_), n_users(n_users_), l_ut(l_ut_),
      k_blocks(k_blocks_), t_slots(t_slots_), i_frames(i_frames_), l_h(l_h_),
      l_g(l_g_) {
    const int counts[] = {m_bs, n_irs, n_users, l_ut, k_blocks,
                          t_slots, i_frames, l_h, l_g};
    for (int c : counts)
        if (c < 1)
            throw DimMismatch("SystemDims: all counts must be >= 1");
    if (k_blocks < p())
        throw IdentifiabilityViolation(
            "K = " + std::to_string(k_blocks) + " < P = N*L*U = " +
            std::to_string(p()) + "; the design matrix cannot be full row-rank");
    if (l_h > std::min(m_bs, n_irs))
        throw DimMismatch("SystemDims: l_h exceeds min(M, N)");
    if (l_g > std::min(n_irs, l_ut))
        throw DimMismatch("SystemDims: l_g exceeds min(N, L)");
}

CVec psk16() {
    CVec c(16);
    for (int q = 0; q < 16; ++q)
        c(q) = std::polar(1.0, M_PI * (2.0 * q + 1.0) / 16.0);
    return c;
}

Complex psk16_anchor() { return std::polar(1.0, M_PI / 16.0); }

CMat gen_steering(const std::vector<double>& angles, int n_elems) {
    CMat a(n_elems, static_cast<Eigen::Index>(angles.size()));
    for (std::size_t c = 0; c < angles.size(); ++c) {
        const double spatial = M_PI * std::sin(angles[c]);
        for (int r = 0; r < n_elems; ++r)
            a(r, static_cast<Eigen::Index>(c)) = std::polar(1.0, spatial * r);
    }
    return a;
}

CMat geometric_channel(int n_rows, int n_cols, const CVec& gains,
                       const std::vector<double>& row_angles,
                       const std::vector<double>& col_angles) {
    const auto n_paths = gains.size();
    if (static_cast<Eigen::Index>(row_angles.size()) != n_paths ||
        static_cast<Eigen::Index>(col_angles.size()) != n_paths)
        throw DimMismatch("geometric_channel: gains and angle lists disagree");
    const CMat a = gen_steering(row_angles, n_rows);
    const CMat b = gen_steering(col_angles, n_cols);
    return a * gains.asDiagonal() * b.adjoint();
}

namespace {

std::vector<double> draw_angles(int n, Rng& rng) {
    std::vector<double> a(n);
    for (double& x : a)
        x = rng.angle();
    return a;
}

CVec draw_gains(int n, Rng& rng) {
    CVec g(n);
    for (Eigen::Index i = 0; i < n; ++i)
        g(i) = rng.complex_gaussian(1.0);
    return g;
}

} // namespace

ChannelSet gen_channels(const SystemDims& dims, Rng& rng) {
    ChannelSet ch;

    // quasi-static IRS-BS channel, drawn once per trial
    {
        const CVec beta = draw_gains(dims.l_h, rng);
        const auto bs_angles = draw_angles(dims.l_h, rng);
        const auto irs_angles = draw_angles(dims.l_h, rng);
        ch.h = geometric_channel(dims.m_bs, dims.n_irs, beta, bs_angles, irs_angles);
    }

    ch.g_frames.reserve(dims.i_frames);
    ch.g_mat.resize(dims.p(), dims.i_frames);
    for (int i = 0; i < dims.i_frames; ++i) {
        CMat gi(dims.n_irs, dims.ul());
        for (int u = 0; u < dims.n_users; ++u) {
            const CVec gamma = draw_gains(dims.l_g, rng);
            const auto irs_angles = draw_angles(dims.l_g, rng);
            const auto ut_angles = draw_angles(dims.l_g, rng);
            gi.middleCols(static_cast<Eigen::Index>(u) * dims.l_ut, dims.l_ut) =
                geometric_channel(dims.n_irs, dims.l_ut, gamma, irs_angles, ut_angles);
        }
        ch.g_mat.col(i) = vec(gi);
        ch.g_frames.push_back(std::move(gi));
    }
    return ch;
}

SymbolFrame gen_symbols(const SystemDims& dims, Rng& rng) {
    if (dims.t_slots < 2)
        throw TooFewSlots("gen_symbols: T >= 2 required (row 0 is the anchor)");
    const CVec alphabet = psk16();
    SymbolFrame sf;
    sf.x.resize(dims.t_slots, dims.ul());
    sf.x.row(0).setConstant(psk16_anchor());
    for (int j = 0; j < dims.ul(); ++j)
        for (int t = 1; t < dims.t_slots; ++t)
            sf.x(t, j) = alphabet(rng.uniform_index(16));
    return sf;
}

CodingDesign build_design(const SystemDims& dims) {
    const int k = dims.k_blocks;
    if (k < dims.p())
        throw IdentifiabilityViolation(
            "build_design: K = " + std::to_string(k) + " < P = " +
            std::to_string(dims.p()));

    auto omega_pow = [k](std::int64_t e) {
        return std::polar(1.0, -2.0 * M_PI * static_cast<double>(e % k) /
                                   static_cast<double>(k));
    };

    CodingDesign cd;
    cd.s.resize(k, dims.n_irs);
    for (int n = 0; n < dims.n_irs; ++n)
        for (int kk = 0; kk < k; ++kk)
            cd.s(kk, n) = omega_pow(static_cast<std::int64_t>(kk) * n);

    cd.w.resize(k, dims.ul());
    for (int j = 0; j < dims.ul(); ++j)
        for (int kk = 0; kk < k; ++kk)
            cd.w(kk, j) = omega_pow(static_cast<std::int64_t>(kk) * j * dims.n_irs);

    cd.psi = khatri_rao(cd.w.transpose(), cd.s.transpose());
    return cd;
}

double psi_orthogonality_defect(const CodingDesign& cd) {
    const auto p = cd.psi.rows();
    const auto k = cd.psi.cols();
    CMat gram = cd.psi * cd.psi.adjoint() / static_cast<double>(k);
    gram -= CMat::Identity(p, p);
    return gram.cwiseAbs().maxCoeff();
}

} // namespace irslink
