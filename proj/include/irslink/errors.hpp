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

#ifndef IRSLINK_ERRORS_HPP
#define IRSLINK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace irslink {

#define IRSLINK_DEFINE_ERROR(Name)                                   \
    struct Name : std::runtime_error {                               \
        explicit Name(const std::string& msg)                        \
            : std::runtime_error(std::string(#Name) + ": " + msg) {} \
    }

IRSLINK_DEFINE_ERROR(ColumnMismatch);
IRSLINK_DEFINE_ERROR(LengthMismatch);
IRSLINK_DEFINE_ERROR(DimMismatch);
IRSLINK_DEFINE_ERROR(IndexOutOfRange);
IRSLINK_DEFINE_ERROR(ZeroMatrix);
IRSLINK_DEFINE_ERROR(ZeroSignal);
IRSLINK_DEFINE_ERROR(ZeroAnchor);
IRSLINK_DEFINE_ERROR(ZeroTruth);
IRSLINK_DEFINE_ERROR(EmptyMask);
IRSLINK_DEFINE_ERROR(TooFewSlots);
IRSLINK_DEFINE_ERROR(DegenerateInput);
IRSLINK_DEFINE_ERROR(IdentifiabilityViolation);
IRSLINK_DEFINE_ERROR(RankDeficientStep);
IRSLINK_DEFINE_ERROR(ConfigError);

#undef IRSLINK_DEFINE_ERROR

} // namespace irslink

#endif // IRSLINK_ERRORS_HPP
