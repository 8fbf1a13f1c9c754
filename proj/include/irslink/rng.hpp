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

#ifndef IRSLINK_RNG_HPP
#define IRSLINK_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace irslink {

/// splitmix64 finalizer; used to derive independent child seeds from a
/// master seed so that parallel trials get decorrelated streams.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic random stream. All floating-point draws are built from
/// raw 64-bit words so that a fixed seed gives bit-identical output on
/// every IEEE-754 platform, independent of the standard library's
/// distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1]; safe as a log() argument.
    double uniform_pos() {
        return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
    }

    /// Uniform angle on [0, 2*pi).
    double angle() { return 2.0 * M_PI * uniform(); }

    /// Unbiased integer in [0, n).
    std::uint32_t uniform_index(std::uint32_t n) {
        const std::uint64_t limit = ~0ULL - (~0ULL % n);
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return static_cast<std::uint32_t>(x % n);
    }

    /// Circularly-symmetric complex Gaussian CN(0, sigma^2): per-entry
    /// variance sigma^2, real and imaginary parts sigma^2/2 each.
    std::complex<double> complex_gaussian(double sigma) {
        const double r = sigma * std::sqrt(-std::log(uniform_pos()));
        const double phi = angle();
        return {r * std::cos(phi), r * std::sin(phi)};
    }

private:
    std::mt19937_64 gen_;
};

} // namespace irslink

#endif // IRSLINK_RNG_HPP
