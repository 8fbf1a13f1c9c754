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

#include "irslink/bals.hpp"

#include <cmath>
#include <string>

namespace irslink {

namespace {

// Column-pivoted QR solve with rank detection; pivots below
// 1e-10 * |largest pivot| count as zero.
CMat solve_ls(const CMat& a, const CMat& b, const char* step) {
    Eigen::ColPivHouseholderQR<CMat> qr(a);
    qr.setThreshold(1e-10);
    if (qr.rank() < a.cols())
        throw RankDeficientStep(std::string(step) + ": regressor rank " +
                                std::to_string(qr.rank()) + " < " +
                                std::to_string(a.cols()) + " columns");
    return qr.solve(b);
}

} // namespace

BalsResult bals_estimate(const ReceivedData& rd, const CodingDesign& cd,
                         const CMat& x_pilot, const SystemDims& dims,
                         const BalsConfig& cfg, Rng& rng) {
    if (cfg.max_iter < 1 || cfg.tol <= 0.0)
        throw ConfigError("bals_estimate: max_iter >= 1 and tol > 0 required");
    const int m = dims.m_bs;
    const int n = dims.n_irs;
    const int t = dims.t_slots;
    const int ul = dims.ul();
    const int k = dims.k_blocks;
    const int frames = dims.i_frames;
    const int p = dims.p();
    const int tm = dims.tm();
    if (rd.y_tall.rows() != dims.tall_rows() || rd.y_tall.cols() != k)
        throw DimMismatch("bals_estimate: y_tall shape");
    if (x_pilot.rows() != t || x_pilot.cols() != ul)
        throw DimMismatch("bals_estimate: pilot matrix shape");

    // slice views Y[i,k] as M x T blocks
    auto slice = [&](int i, int kk) {
        return unvec(rd.y_tall.col(kk).segment(static_cast<Eigen::Index>(i) * tm, tm), m, t);
    };

    // per-block coded pilot blocks X * D_k(W), reused every sweep
    std::vector<CMat> xw(static_cast<std::size_t>(k));
    for (int kk = 0; kk < k; ++kk)
        xw[static_cast<std::size_t>(kk)] = x_pilot * cd.w.row(kk).asDiagonal();

    BalsResult res;
    res.h_hat = cfg.init_provided
                    ? cfg.h_init
                    : awgn(m, n, std::numbers::sqrt2_v<double>, rng) / std::numbers::sqrt2_v<double>;
    if (res.h_hat.rows() != m || res.h_hat.cols() != n)
        throw DimMismatch("bals_estimate: h_init shape");
    res.g_frames_hat.assign(static_cast<std::size_t>(frames), CMat::Zero(n, ul));
    res.g_mat_hat.setZero(p, frames);

    const double y_norm = rd.y_tall.norm();
    double cost_prev = -1.0;

    CMat g_reg(static_cast<Eigen::Index>(k) * tm, p);
    CVec g_rhs(static_cast<Eigen::Index>(k) * tm);
    CMat h_reg(static_cast<Eigen::Index>(frames) * k * t, n);
    CMat h_rhs(static_cast<Eigen::Index>(frames) * k * t, m);

    for (int iter = 0; iter < cfg.max_iter; ++iter) {
        // G-step: per frame, vec(Y[i,k]) = (X D_k(W) (x) H D_k(S)) vec(G_i)
        for (int i = 0; i < frames; ++i) {
            for (int kk = 0; kk < k; ++kk) {
                const CMat hs = res.h_hat * cd.s.row(kk).asDiagonal();
                g_reg.middleRows(static_cast<Eigen::Index>(kk) * tm, tm) =
                    kronecker(xw[static_cast<std::size_t>(kk)], hs);
                g_rhs.segment(static_cast<Eigen::Index>(kk) * tm, tm) = vec(slice(i, kk));
            }
            const CVec gi = solve_ls(g_reg, g_rhs, "G-step");
            res.g_frames_hat[static_cast<std::size_t>(i)] = unvec(gi, n, ul);
            res.g_mat_hat.col(i) = gi;
        }

        // H-step: Y[i,k]^T = (X D_k(W) G_i^T D_k(S)) H^T, stacked over (i,k)
        for (int i = 0; i < frames; ++i)
            for (int kk = 0; kk < k; ++kk) {
                const Eigen::Index row0 =
                    (static_cast<Eigen::Index>(i) * k + kk) * t;
                h_reg.middleRows(row0, t) =
                    xw[static_cast<std::size_t>(kk)] *
                    res.g_frames_hat[static_cast<std::size_t>(i)].transpose() *
                    cd.s.row(kk).asDiagonal();
                h_rhs.middleRows(row0, t) = slice(i, kk).transpose();
            }
        res.h_hat = solve_ls(h_reg, h_rhs, "H-step").transpose();

        // reconstruction error through the forward model
        ChannelSet est{res.h_hat, res.g_frames_hat, res.g_mat_hat};
        SymbolFrame sf{x_pilot};
        const double cost = (rd.y_tall - assemble_tall(est, cd, sf)).norm();
        res.cost_trace.push_back(cost);

        if (cost <= 1e-14 * y_norm)
            break; // exact fit
        if (cost_prev >= 0.0 && std::abs(cost_prev - cost) < cfg.tol * cost_prev)
            break;
        cost_prev = cost;
    }
    res.iterations = static_cast<int>(res.cost_trace.size());
    res.converged = res.iterations < cfg.max_iter ||
                    (!res.cost_trace.empty() &&
                     (res.cost_trace.back() <= 1e-14 * y_norm ||
                      (res.cost_trace.size() >= 2 &&
                       std::abs(res.cost_trace[res.cost_trace.size() - 2] -
                                res.cost_trace.back()) <
                           cfg.tol * res.cost_trace[res.cost_trace.size() - 2])));
    return res;
}

void bals_fix_scale(BalsResult& result, const CRowVec& h_row0) {
    const double denom = h_row0.squaredNorm();
    if (denom == 0.0)
        throw ZeroAnchor("bals_fix_scale: reference row of H is zero");
    Complex lambda(0.0, 0.0);
    for (Eigen::Index j = 0; j < h_row0.size(); ++j)
        lambda += result.h_hat(0, j) * std::conj(h_row0(j));
    lambda /= denom;
    if (lambda == Complex(0.0, 0.0))
        return; // estimate orthogonal to the reference; nothing sensible to do
    result.h_hat /= lambda;
    result.g_mat_hat *= lambda;
    for (auto& g : result.g_frames_hat)
        g *= lambda;
}

} // namespace irslink
