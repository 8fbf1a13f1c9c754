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

#ifndef IRSLINK_BALS_HPP
#define IRSLINK_BALS_HPP

#include <vector>

#include "irslink/signal_model.hpp"

namespace irslink {

struct BalsConfig {
    int max_iter = 1000;
    double tol = 1e-6;       ///< relative reconstruction-error change threshold
    bool init_provided = false;
    CMat h_init;             ///< used when init_provided; else CN(0,1) from rng
};

struct BalsResult {
    CMat h_hat;                    ///< M x N, common across frames
    std::vector<CMat> g_frames_hat; ///< per-frame N x UL
    CMat g_mat_hat;                ///< P x I, column i = vec(g_frames_hat[i])
    int iterations = 0;
    std::vector<double> cost_trace; ///< ||Y - reconstruction||_F after each sweep
    bool converged = true;          ///< false when max_iter was exhausted
};

/// Pilot-assisted bilinear alternating least squares on the block-slice
/// model with the symbol matrix fully known. Each sweep solves two exact
/// LS subproblems: per-frame G given H (stacking the vectorized slices
/// over blocks) and the common H given all G (stacking transposed slices
/// over frames and blocks), so the reconstruction error never increases.
/// Stops when the relative cost change falls below cfg.tol or the cost
/// reaches the exact-fit floor. Throws RankDeficientStep when a stacked
/// regressor loses column rank.
BalsResult bals_estimate(const ReceivedData& rd, const CodingDesign& cd,
                         const CMat& x_pilot, const SystemDims& dims,
                         const BalsConfig& cfg, Rng& rng);

/// Removes the global scalar ambiguity between h_hat and the g estimates
/// using the known first row of H, mirroring the side information the
/// semi-blind receiver gets; makes channel-error comparisons fair.
void bals_fix_scale(BalsResult& result, const CRowVec& h_row0);

} // namespace irslink

#endif // IRSLINK_BALS_HPP
