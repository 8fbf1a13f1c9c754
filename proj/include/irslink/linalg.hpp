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

#ifndef IRSLINK_LINALG_HPP
#define IRSLINK_LINALG_HPP

#include <Eigen/Dense>
#include <complex>

#include "irslink/errors.hpp"
#include "irslink/rng.hpp"

namespace irslink {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using CRowVec = Eigen::RowVectorXcd;

/// Dominant singular triplet of a complex matrix. u and v are unit-norm;
/// the first entry of u with magnitude above 1e-12 is real and
/// non-negative, which pins the otherwise free common phase.
struct RankOneTriplet {
    double sigma = 0.0;
    CVec u;
    CVec v;
    int iterations = 0;   ///< power-iteration count actually spent
    bool converged = true; ///< false when the iteration cap was hit
};

/// Kronecker product: block (i,j) of the result is a(i,j)*b.
CMat kronecker(const CMat& a, const CMat& b);

/// Column-wise Kronecker product; column p of the result is
/// kronecker(a.col(p), b.col(p)). Throws ColumnMismatch.
CMat khatri_rao(const CMat& a, const CMat& b);

/// Column-major stacking of a matrix into a vector.
CVec vec(const CMat& a);

/// Inverse of vec. Throws LengthMismatch when x.size() != rows*cols.
CMat unvec(const CVec& x, Eigen::Index rows, Eigen::Index cols);

/// k x k DFT matrix, entry (r,c) = exp(-2*pi*i*r*c/k).
CMat dft_matrix(Eigen::Index k);

/// Best rank-one approximation sigma*u*v^H, computed by power iteration
/// on the Gram matrix m^H m. Deterministic: the iteration is seeded from
/// the column of m with the largest norm, stops when the relative change
/// of the Rayleigh quotient drops below 1e-13, and is capped at 500
/// iterations (near-degenerate leading singular values converge slowly;
/// the cap bounds the cost and is reported via `converged`).
/// Throws ZeroMatrix when ||m||_F == 0.
RankOneTriplet best_rank_one(const CMat& m);

/// Matrix of i.i.d. CN(0, sigma^2) entries, filled column-major from rng.
CMat awgn(Eigen::Index rows, Eigen::Index cols, double sigma, Rng& rng);

} // namespace irslink

#endif // IRSLINK_LINALG_HPP
