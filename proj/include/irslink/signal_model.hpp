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

#ifndef IRSLINK_SIGNAL_MODEL_HPP
#define IRSLINK_SIGNAL_MODEL_HPP

#include "irslink/scenario.hpp"

namespace irslink {

/// Received data in tall-unfolding form: y_tall is (I*T*M) x K, where row
/// (i*TM + t*M + m) of column k holds the sample of frame i, slot t, BS
/// antenna m during block k (i outermost, m innermost; all zero-based).
/// This layout is forced jointly by the column-major vec of the M x T
/// block slice and the frame-outermost stacking of the per-block columns.
struct ReceivedData {
    CMat y_tall;
    double snr_db = 0.0;        ///< +inf flags noiseless operation
    double noise_sigma = 0.0;   ///< per-entry noise std
    double signal_power = 0.0;  ///< mean |entry|^2 of the noiseless y_tall
};

/// Noiseless M x T received slice of frame i, block k:
/// H * D_k(S) * G_i * D_k(W) * X^T. Zero-based i, k; throws IndexOutOfRange.
CMat received_slice(const ChannelSet& ch, const CodingDesign& cd,
                    const SymbolFrame& sf, int i, int k);

/// Noiseless tall unfolding (I*T*M) x K, assembled through the
/// Khatri-Rao route: khatri_rao(g_mat^T, kronecker(x, h)) * psi. This
/// equals stacking vec(received_slice(i, k)) over frames per column, a
/// cross-check exercised by the tests. Throws DimMismatch.
CMat assemble_tall(const ChannelSet& ch, const CodingDesign& cd,
                   const SymbolFrame& sf);

/// Adds white noise at the requested receive-side SNR. The per-entry
/// noise variance is signal_power / 10^(snr_db/10); snr_db = +inf leaves
/// the signal untouched. Throws ZeroSignal on an all-zero input.
ReceivedData add_noise(const CMat& y, double snr_db, Rng& rng);

} // namespace irslink

#endif // IRSLINK_SIGNAL_MODEL_HPP
