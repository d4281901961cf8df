#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "kneser_lab/error.hpp"

namespace kneser_lab {

inline unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

/// Runs task(i) for i in [0, count) on up to `threads` workers. Results come
/// back in task order, so anything merged from them is independent of the
/// thread count. The lowest-index exception, if any, is rethrown.
template <class Result, class Task>
std::vector<Result> parallel_tasks(std::size_t count, unsigned threads, Task&& task) {
    std::vector<Result> results(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) return;
            try {
                results[i] = task(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const auto workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), std::max<std::size_t>(count, 1)));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

/// KNESER_LAB_BUDGET overrides enumeration caps when set to a positive integer.
inline std::uint64_t budget_from_env(std::uint64_t fallback) {
    const char* raw = std::getenv("KNESER_LAB_BUDGET");
    if (raw == nullptr || *raw == '\0') return fallback;
    try {
        std::size_t used = 0;
        const auto value = std::stoull(raw, &used);
        if (used != std::string(raw).size() || value == 0) throw std::invalid_argument(raw);
        return value;
    } catch (const std::exception&) {
        fail(ErrorKind::format, std::string("KNESER_LAB_BUDGET must be a positive integer, got '") + raw + "'");
    }
}

}  // namespace kneser_lab
