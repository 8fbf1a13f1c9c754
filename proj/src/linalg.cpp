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

#include "irslink/linalg.hpp"

#include <cmath>
#include <string>

namespace irslink {

CMat kronecker(const CMat& a, const CMat& b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

CMat khatri_rao(const CMat& a, const CMat& b) {
    if (a.cols() != b.cols())
        throw ColumnMismatch("khatri_rao: " + std::to_string(a.cols()) + " vs " +
                             std::to_string(b.cols()) + " columns");
    CMat out(a.rows() * b.rows(), a.cols());
    for (Eigen::Index p = 0; p < a.cols(); ++p)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            out.block(i * b.rows(), p, b.rows(), 1) = a(i, p) * b.col(p);
    return out;
}

CVec vec(const CMat& a) {
    return Eigen::Map<const CVec>(a.data(), a.size());
}

CMat unvec(const CVec& x, Eigen::Index rows, Eigen::Index cols) {
    if (x.size() != rows * cols)
        throw LengthMismatch("unvec: vector of length " + std::to_string(x.size()) +
                             " into " + std::to_string(rows) + "x" + std::to_string(cols));
    return Eigen::Map<const CMat>(x.data(), rows, cols);
}

CMat dft_matrix(Eigen::Index k) {
    CMat f(k, k);
    for (Eigen::Index c = 0; c < k; ++c)
        for (Eigen::Index r = 0; r < k; ++r) {
            // reduce r*c mod k in exact integer arithmetic to keep the
            // angle small; large sin/cos arguments lose precision
            const auto e = static_cast<std::int64_t>(r) * c % k;
            f(r, c) = std::polar(1.0, -2.0 * M_PI * static_cast<double>(e) / static_cast<double>(k));
        }
    return f;
}

RankOneTriplet best_rank_one(const CMat& m) {
    if (m.squaredNorm() == 0.0)
        throw ZeroMatrix("best_rank_one: input has zero Frobenius norm");

    constexpr double kTol = 1e-13;
    constexpr int kMaxIter = 500;

    const CMat gram = m.adjoint() * m;

    // seed with the column of m holding the most energy
    Eigen::Index seed_col = 0;
    Eigen::VectorXd col_energy(m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        col_energy(j) = m.col(j).squaredNorm();
    col_energy.maxCoeff(&seed_col);

    CVec v = gram.col(seed_col);
    v.normalize();

    RankOneTriplet out;
    double lambda_prev = -1.0;
    int iter = 0;
    for (; iter < kMaxIter; ++iter) {
        CVec w = gram * v;
        const double lambda = v.dot(w).real();
        v = w.normalized();
        if (lambda_prev >= 0.0 &&
            std::abs(lambda - lambda_prev) <= kTol * std::abs(lambda))
            break;
        lambda_prev = lambda;
    }
    out.iterations = iter + 1;
    out.converged = iter < kMaxIter;

    CVec u = m * v;
    out.sigma = u.norm();
    u /= out.sigma;

    // common-phase convention: first non-negligible entry of u made
    // real and non-negative (rotating u and v together keeps u*v^H)
    for (Eigen::Index i = 0; i < u.size(); ++i) {
        const double mag = std::abs(u(i));
        if (mag > 1e-12) {
            const Complex rot = std::conj(u(i)) / mag;
            u *= rot;
            v *= rot;
            break;
        }
    }

    out.u = std::move(u);
    out.v = std::move(v);
    return out;
}

CMat awgn(Eigen::Index rows, Eigen::Index cols, double sigma, Rng& rng) {
    CMat out(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i)
            out(i, j) = rng.complex_gaussian(sigma);
    return out;
}

} // namespace irslink
