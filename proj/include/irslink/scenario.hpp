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

#ifndef IRSLINK_SCENARIO_HPP
#define IRSLINK_SCENARIO_HPP

#include <vector>

#include "irslink/linalg.hpp"

namespace irslink {

/// All integer dimensions of one simulation setup.
///
/// The constructor validates every rule and throws on violation, so a
/// SystemDims value is valid by construction. In particular K >= P is the
/// hard identifiability bound of the filtering step: fewer blocks than
/// composite channel parameters makes the design matrix rank-deficient
/// and the whole receiver chain undefined.
struct SystemDims {
    int m_bs;     ///< BS antennas (M)
    int n_irs;    ///< IRS elements (N)
    int n_users;  ///< user terminals (U)
    int l_ut;     ///< antennas per user (L)
    int k_blocks; ///< blocks per frame (K)
    int t_slots;  ///< time slots per block (T)
    int i_frames; ///< frames (I)
    int l_h;      ///< dominant paths, IRS-BS link
    int l_g;      ///< dominant paths, each UT-IRS link

    SystemDims(int m_bs, int n_irs, int n_users, int l_ut, int k_blocks,
               int t_slots, int i_frames, int l_h, int l_g);

    int ul() const { return n_users * l_ut; }           ///< UL
    int p() const { return n_irs * ul(); }              ///< P = N*L*U
    int tm() const { return t_slots * m_bs; }           ///< TM
    int tall_rows() const { return i_frames * tm(); }   ///< ITM
};

/// Ground-truth channels of one trial. h is the quasi-static IRS-BS
/// channel (M x N); g_frames[i] is the frame-i augmented UT-IRS channel
/// [G_1i, ..., G_Ui] (N x UL); g_mat column i is vec(g_frames[i]).
struct ChannelSet {
    CMat h;
    std::vector<CMat> g_frames;
    CMat g_mat;
};

/// Per-block IRS phase-shift matrix s (K x N), coding matrix w (K x UL),
/// both unit-modulus, and their combined design psi (P x K) with column k
/// equal to kronecker(w.row(k)^T, s.row(k)^T). The construction in
/// build_design guarantees (1/K) psi psi^H == I_P.
struct CodingDesign {
    CMat s;
    CMat w;
    CMat psi;
};

/// Transmitted symbols (T x UL) over 16-PSK. Row 0 is the anchor row: a
/// fixed constellation point in every column, known at the receiver and
/// never counted in symbol-error statistics.
struct SymbolFrame {
    CMat x;
    CRowVec anchor_row() const { return x.row(0); }
};

/// 16-PSK alphabet exp(j*pi*(2q+1)/16), q = 0..15. The half-step offset
/// keeps all points off the axes so nearest-point detection has no
/// boundary ties on exact inputs.
CVec psk16();

/// The anchor constellation point (q = 0).
Complex psk16_anchor();

/// Half-wavelength ULA response, one column per angle:
/// [1, e^{j*pi*sin(theta)}, ..., e^{j*pi*(n-1)*sin(theta)}]^T.
CMat gen_steering(const std::vector<double>& angles, int n_elems);

/// A diag(gains) B^H for ULA responses A (n_rows x n_paths) and
/// B (n_cols x n_paths); the shared low-rank geometric channel builder.
CMat geometric_channel(int n_rows, int n_cols, const CVec& gains,
                       const std::vector<double>& row_angles,
                       const std::vector<double>& col_angles);

/// Draws one trial's channels: H once (quasi-static), each per-user
/// per-frame block independently, all path gains CN(0,1) and all angles
/// uniform on [0, 2*pi).
ChannelSet gen_channels(const SystemDims& dims, Rng& rng);

/// Draws the symbol frame: row 0 anchored at psk16_anchor(), rows 1..T-1
/// i.i.d. uniform over the alphabet. Throws TooFewSlots when T < 2.
SymbolFrame gen_symbols(const SystemDims& dims, Rng& rng);

/// DFT-based design: with omega = exp(-2*pi*i/K), S[k,n] = omega^(k*n)
/// (truncated K-point DFT) and W[k,j] = omega^(k*j*N) (stride-N column
/// selection of the same DFT). Row j*N+n of psi is then DFT row j*N+n;
/// all P rows distinct, so psi psi^H = K*I_P. Throws
/// IdentifiabilityViolation when K < P.
CodingDesign build_design(const SystemDims& dims);

/// max-abs entry of (1/K) psi psi^H - I_P; the row-orthogonality defect.
double psi_orthogonality_defect(const CodingDesign& cd);

} // namespace irslink

#endif // IRSLINK_SCENARIO_HPP
