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

#ifndef IRSLINK_RECEIVER_HPP
#define IRSLINK_RECEIVER_HPP

#include <utility>
#include <vector>

#include "irslink/signal_model.hpp"

namespace irslink {

/// Output of the Khatri-Rao factorization stage. Column p of the filtered
/// data factors as (up to noise) the Kronecker product of g_hat row p
/// (length I) and q_hat column p (length TM); per_column_residual[p] is
/// the squared Frobenius mass the rank-one truncation discarded, so
/// ||Z - khatri_rao(g_hat^T, q_hat)||_F^2 == sum(per_column_residual).
struct KrfOutput {
    CMat g_hat;                        ///< P x I
    CMat q_hat;                        ///< TM x P
    Eigen::VectorXd per_column_residual; ///< length P
    std::vector<int> rank_one_iterations; ///< per-column power-iteration counts
    int capped_iterations = 0;         ///< columns that hit the iteration cap
    std::vector<int> degenerate_columns;   ///< all-zero columns (unrecoverable)
    std::vector<int> skipped_anchor_columns; ///< columns left unscaled by ambiguity removal
};

struct KfOutput {
    CMat x_raw; ///< T x UL, up to one complex scalar
    CMat h_raw; ///< M x N, up to the inverse of that scalar
    int iterations = 0;
    double residual = 0.0; ///< squared mass discarded by the rank-one step
};

struct KakfDiagnostics {
    Eigen::VectorXd krf_residuals;
    std::vector<int> krf_iterations;
    int krf_capped = 0;
    std::vector<int> degenerate_columns;
    std::vector<int> skipped_anchor_columns;
    int kf_iterations = 0;
    double kf_residual = 0.0;
};

/// Final joint estimate. Row 0 of x_hat and row 0 of h_hat are the known
/// side information verbatim (the receiver holds them by protocol).
struct KakfEstimate {
    CMat g_hat;                 ///< P x I, ambiguity-corrected
    CMat h_hat;                 ///< M x N
    CMat x_hat;                 ///< T x UL
    Eigen::MatrixXi x_detected; ///< hard decisions, alphabet indices
    KakfDiagnostics diagnostics;
};

/// Side information available at the receiver: the first row of the
/// IRS-BS channel and the anchor (first) row of the symbol frame.
struct SideInfo {
    CRowVec h_row0;        ///< length N
    CRowVec x_anchor_row;  ///< length UL
};

/// Matched filter Z = (1/K) * y_tall * psi^H, the exact left-inverse of
/// the design under row orthogonality. Throws IdentifiabilityViolation
/// when psi has fewer columns than rows (K < P).
CMat match_filter(const ReceivedData& rd, const CodingDesign& cd);

/// Khatri-Rao factorization stage: each column p of z is reshaped to
/// TM x I and replaced by its best rank-one approximation, recovering
/// q_hat column p and g_hat row p up to a per-column scale. The P
/// subproblems are independent; with n_threads > 1 they run concurrently
/// into preassigned slots, bit-identical to the sequential result.
/// All-zero columns are flagged as degenerate, not errors. Throws
/// DimMismatch on inconsistent shapes.
KrfOutput krf_stage(const CMat& z, const SystemDims& dims, int n_threads = 1);

/// Rearranges q_hat (TM x P) into the (T*UL) x (NM) matrix whose row
/// (j*T + t) is vec of the M x N block at (t, j), so an exact Kronecker
/// structure q_hat == X (x) H becomes the rank-one outer product
/// vec(X) * vec(H)^T. Throws DimMismatch.
CMat kf_rearrange(const CMat& q_hat, const SystemDims& dims);

/// Kronecker factorization stage: one rank-one approximation of the
/// rearranged matrix, split back into x_raw and h_raw. Throws
/// DegenerateInput on an all-zero q_hat.
KfOutput kf_stage(const CMat& q_hat, const SystemDims& dims);

/// Per-column scaling correction: divides q_hat column p and multiplies
/// g_hat row p by delta_p = q_hat(0,p) / known_q_row0[p], which leaves
/// every product g_p * q_p^T untouched. Columns whose reference entry is
/// below 1e-9 in magnitude are skipped and recorded.
KrfOutput remove_ambiguity_krf(KrfOutput krf, const CRowVec& known_q_row0);

/// Global scalar correction: lambda is the least-squares fit of x_raw
/// row 0 against the known anchor row (using the whole row rather than a
/// single entry suppresses noise in the reference). Returns
/// (x_raw/lambda, h_raw*lambda). Throws ZeroAnchor.
std::pair<CMat, CMat> remove_ambiguity_kf(const CMat& x_raw, const CMat& h_raw,
                                          const CRowVec& anchor_row);

/// Nearest-constellation-point hard decision, ties to the lower index.
Eigen::MatrixXi detect_symbols(const CMat& x_hat, const CVec& constellation);

/// Full two-stage pipeline: matched filter, Khatri-Rao factorization,
/// per-column ambiguity removal against x_anchor (x) h_row0, Kronecker
/// factorization, global scalar removal, then symbol detection.
KakfEstimate kakf_run(const ReceivedData& rd, const CodingDesign& cd,
                      const SideInfo& side, const SystemDims& dims,
                      int n_threads = 1);

} // namespace irslink

#endif // IRSLINK_RECEIVER_HPP
