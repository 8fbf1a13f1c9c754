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

#ifndef IRSLINK_PARALLEL_HPP
#define IRSLINK_PARALLEL_HPP

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace irslink {

/// Runs fn(0..n-1) on up to n_threads workers. Each index is processed
/// exactly once; fn must write only to its own preassigned slot, which
/// keeps results identical for any worker count or schedule. The first
/// exception thrown inside a worker is rethrown on the caller.
template <typename Fn>
void parallel_for(int n, int n_threads, Fn&& fn) {
    if (n <= 0)
        return;
    if (n_threads <= 1 || n == 1) {
        for (int i = 0; i < n; ++i)
            fn(i);
        return;
    }

    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (int i; (i = next.fetch_add(1)) < n;) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    const int workers = std::min(n_threads, n);
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace irslink

#endif // IRSLINK_PARALLEL_HPP
