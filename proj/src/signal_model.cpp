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

#include "irslink/signal_model.hpp"

#include <cmath>
#include <string>

namespace irslink {

CMat received_slice(const ChannelSet& ch, const CodingDesign& cd,
                    const SymbolFrame& sf, int i, int k) {
    if (i < 0 || i >= static_cast<int>(ch.g_frames.size()))
        throw IndexOutOfRange("received_slice: frame " + std::to_string(i));
    if (k < 0 || k >= cd.s.rows())
        throw IndexOutOfRange("received_slice: block " + std::to_string(k));
    return ch.h * cd.s.row(k).asDiagonal() * ch.g_frames[static_cast<std::size_t>(i)] *
           cd.w.row(k).asDiagonal() * sf.x.transpose();
}

CMat assemble_tall(const ChannelSet& ch, const CodingDesign& cd,
                   const SymbolFrame& sf) {
    if (ch.h.rows() < 1 || ch.g_frames.empty())
        throw DimMismatch("assemble_tall: empty channel set");
    if (ch.g_mat.rows() != cd.psi.rows())
        throw DimMismatch("assemble_tall: g_mat has " +
                          std::to_string(ch.g_mat.rows()) + " rows, psi " +
                          std::to_string(cd.psi.rows()));
    if (sf.x.cols() * ch.h.cols() != ch.g_mat.rows())
        throw DimMismatch("assemble_tall: X and H do not match P");
    const CMat q = kronecker(sf.x, ch.h); // TM x P
    return khatri_rao(ch.g_mat.transpose(), q) * cd.psi;
}

ReceivedData add_noise(const CMat& y, double snr_db, Rng& rng) {
    const double energy = y.squaredNorm();
    if (energy == 0.0)
        throw ZeroSignal("add_noise: noiseless input has zero power");

    ReceivedData rd;
    rd.snr_db = snr_db;
    rd.signal_power = energy / static_cast<double>(y.size());
    if (std::isinf(snr_db)) {
        rd.noise_sigma = 0.0;
        rd.y_tall = y;
        return rd;
    }
    rd.noise_sigma = std::sqrt(rd.signal_power / std::pow(10.0, snr_db / 10.0));
    rd.y_tall = y + awgn(y.rows(), y.cols(), rd.noise_sigma, rng);
    return rd;
}

} // namespace irslink
