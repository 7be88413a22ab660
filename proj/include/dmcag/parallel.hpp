//
// Copyright 2026 The dmcag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef DMCAG_PARALLEL_HPP
#define DMCAG_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dmcag {

/// Default worker count: the hardware concurrency, at least 1.
inline unsigned default_jobs()
{
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Evaluates task(i) for i in [0, count) on up to `jobs` threads and returns
/// the results indexed by i, so the merged output does not depend on the
/// number of workers.  The first exception thrown by a task is rethrown.
template <typename Result, typename Task>
std::vector<Result> run_indexed(std::size_t count, unsigned jobs, Task task)
{
    std::vector<Result> results(count);
    const unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(std::max(1u, jobs), std::max<std::size_t>(count, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            results[i] = task(i);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                results[i] = task(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next.store(count);
                return;
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);
    return results;
}

} // namespace dmcag

#endif // DMCAG_PARALLEL_HPP
