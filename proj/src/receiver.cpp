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

#include "irslink/receiver.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "irslink/parallel.hpp"

namespace irslink {

CMat match_filter(const ReceivedData& rd, const CodingDesign& cd) {
    const auto p = cd.psi.rows();
    const auto k = cd.psi.cols();
    if (k < p)
        throw IdentifiabilityViolation("match_filter: K = " + std::to_string(k) +
                                       " < P = " + std::to_string(p));
    if (rd.y_tall.cols() != k)
        throw DimMismatch("match_filter: y_tall has " +
                          std::to_string(rd.y_tall.cols()) + " blocks, psi " +
                          std::to_string(k));
    return rd.y_tall * cd.psi.adjoint() / static_cast<double>(k);
}

KrfOutput krf_stage(const CMat& z, const SystemDims& dims, int n_threads) {
    const int p = dims.p();
    if (z.rows() != dims.tall_rows() || z.cols() != p)
        throw DimMismatch("krf_stage: expected " + std::to_string(dims.tall_rows()) +
                          "x" + std::to_string(p) + ", got " +
                          std::to_string(z.rows()) + "x" + std::to_string(z.cols()));

    const int tm = dims.tm();
    const int frames = dims.i_frames;

    KrfOutput out;
    out.g_hat.setZero(p, frames);
    out.q_hat.setZero(tm, p);
    out.per_column_residual.setZero(p);
    out.rank_one_iterations.assign(static_cast<std::size_t>(p), 0);
    std::vector<unsigned char> degenerate(static_cast<std::size_t>(p), 0);
    std::vector<unsigned char> capped(static_cast<std::size_t>(p), 0);

    parallel_for(p, n_threads, [&](int col) {
        const CMat zp = unvec(z.col(col), tm, frames);
        const double energy = zp.squaredNorm();
        if (energy == 0.0) {
            degenerate[static_cast<std::size_t>(col)] = 1;
            return; // slots stay zero; this column cannot be recovered
        }
        const RankOneTriplet r = best_rank_one(zp);
        const double root = std::sqrt(r.sigma);
        out.q_hat.col(col) = root * r.u;
        out.g_hat.row(col) = (root * r.v.conjugate()).transpose();
        out.per_column_residual(col) = std::max(0.0, energy - r.sigma * r.sigma);
        out.rank_one_iterations[static_cast<std::size_t>(col)] = r.iterations;
        if (!r.converged)
            capped[static_cast<std::size_t>(col)] = 1;
    });

    for (int col = 0; col < p; ++col) {
        if (degenerate[static_cast<std::size_t>(col)])
            out.degenerate_columns.push_back(col);
        if (capped[static_cast<std::size_t>(col)])
            ++out.capped_iterations;
    }
    return out;
}

CMat kf_rearrange(const CMat& q_hat, const SystemDims& dims) {
    const int t = dims.t_slots;
    const int m = dims.m_bs;
    const int n = dims.n_irs;
    const int ul = dims.ul();
    if (q_hat.rows() != dims.tm() || q_hat.cols() != dims.p())
        throw DimMismatch("kf_rearrange: expected " + std::to_string(dims.tm()) +
                          "x" + std::to_string(dims.p()) + ", got " +
                          std::to_string(q_hat.rows()) + "x" +
                          std::to_string(q_hat.cols()));

    // Row order follows vec(X) (t fastest within j), column order follows
    // vec(H) (m fastest within n), so an exact X (x) H input maps to
    // vec(X) * vec(H)^T.
    CMat qt(static_cast<Eigen::Index>(t) * ul, static_cast<Eigen::Index>(n) * m);
    for (int j = 0; j < ul; ++j)
        for (int tt = 0; tt < t; ++tt) {
            const CMat block = q_hat.block(static_cast<Eigen::Index>(tt) * m,
                                           static_cast<Eigen::Index>(j) * n, m, n);
            qt.row(static_cast<Eigen::Index>(j) * t + tt) = vec(block).transpose();
        }
    return qt;
}

KfOutput kf_stage(const CMat& q_hat, const SystemDims& dims) {
    const CMat qt = kf_rearrange(q_hat, dims);
    KfOutput out;
    try {
        const RankOneTriplet r = best_rank_one(qt);
        const double root = std::sqrt(r.sigma);
        out.x_raw = unvec(root * r.u, dims.t_slots, dims.ul());
        out.h_raw = unvec(root * r.v.conjugate(), dims.m_bs, dims.n_irs);
        out.iterations = r.iterations;
        out.residual = std::max(0.0, qt.squaredNorm() - r.sigma * r.sigma);
    } catch (const ZeroMatrix&) {
        throw DegenerateInput("kf_stage: rearranged matrix is zero");
    }
    return out;
}

KrfOutput remove_ambiguity_krf(KrfOutput krf, const CRowVec& known_q_row0) {
    if (known_q_row0.size() != krf.q_hat.cols())
        throw DimMismatch("remove_ambiguity_krf: reference row length " +
                          std::to_string(known_q_row0.size()) + ", expected " +
                          std::to_string(krf.q_hat.cols()));
    for (Eigen::Index col = 0; col < krf.q_hat.cols(); ++col) {
        if (std::abs(known_q_row0(col)) < 1e-9) {
            krf.skipped_anchor_columns.push_back(static_cast<int>(col));
            continue; // AnchorTooSmall: leave the column unscaled
        }
        const Complex delta = krf.q_hat(0, col) / known_q_row0(col);
        if (delta == Complex(0.0, 0.0))
            continue; // degenerate column, nothing to rescale
        krf.q_hat.col(col) /= delta;
        krf.g_hat.row(col) *= delta;
    }
    return krf;
}

std::pair<CMat, CMat> remove_ambiguity_kf(const CMat& x_raw, const CMat& h_raw,
                                          const CRowVec& anchor_row) {
    if (anchor_row.size() != x_raw.cols())
        throw DimMismatch("remove_ambiguity_kf: anchor length " +
                          std::to_string(anchor_row.size()));
    const double denom = anchor_row.squaredNorm();
    if (denom == 0.0)
        throw ZeroAnchor("remove_ambiguity_kf: anchor row is zero");
    Complex lambda(0.0, 0.0);
    for (Eigen::Index j = 0; j < anchor_row.size(); ++j)
        lambda += x_raw(0, j) * std::conj(anchor_row(j));
    lambda /= denom;
    return {x_raw / lambda, h_raw * lambda};
}

Eigen::MatrixXi detect_symbols(const CMat& x_hat, const CVec& constellation) {
    Eigen::MatrixXi out(x_hat.rows(), x_hat.cols());
    for (Eigen::Index j = 0; j < x_hat.cols(); ++j)
        for (Eigen::Index i = 0; i < x_hat.rows(); ++i) {
            int best = 0;
            double best_dist = std::numeric_limits<double>::infinity();
            for (Eigen::Index q = 0; q < constellation.size(); ++q) {
                const double d = std::norm(x_hat(i, j) - constellation(q));
                if (d < best_dist) {
                    best_dist = d;
                    best = static_cast<int>(q);
                }
            }
            out(i, j) = best;
        }
    return out;
}

KakfEstimate kakf_run(const ReceivedData& rd, const CodingDesign& cd,
                      const SideInfo& side, const SystemDims& dims,
                      int n_threads) {
    const CMat z = match_filter(rd, cd);
    KrfOutput krf = krf_stage(z, dims, n_threads);

    // Row 0 of Q = X (x) H is x_anchor (x) h_row0, entry (j*N + n).
    const CRowVec known_q_row0 =
        kronecker(side.x_anchor_row, side.h_row0).row(0);
    krf = remove_ambiguity_krf(std::move(krf), known_q_row0);

    const KfOutput kf = kf_stage(krf.q_hat, dims);
    auto [x_hat, h_hat] = remove_ambiguity_kf(kf.x_raw, kf.h_raw, side.x_anchor_row);

    // The receiver holds these rows by protocol; the estimate carries
    // them verbatim.
    x_hat.row(0) = side.x_anchor_row;
    h_hat.row(0) = side.h_row0;

    KakfEstimate est;
    est.x_detected = detect_symbols(x_hat, psk16());
    est.g_hat = std::move(krf.g_hat);
    est.h_hat = std::move(h_hat);
    est.x_hat = std::move(x_hat);
    est.diagnostics.krf_residuals = std::move(krf.per_column_residual);
    est.diagnostics.krf_iterations = std::move(krf.rank_one_iterations);
    est.diagnostics.krf_capped = krf.capped_iterations;
    est.diagnostics.degenerate_columns = std::move(krf.degenerate_columns);
    est.diagnostics.skipped_anchor_columns = std::move(krf.skipped_anchor_columns);
    est.diagnostics.kf_iterations = kf.iterations;
    est.diagnostics.kf_residual = kf.residual;
    return est;
}

} // namespace irslink
