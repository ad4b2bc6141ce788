#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace symchern {

// Worker count from SYMCHERN_JOBS, else the hardware concurrency.
inline int default_workers()
{
    if (const char* env = std::getenv("SYMCHERN_JOBS")) {
        try {
            int v = std::stoi(env);
            if (v >= 1)
                return v;
        } catch (const std::exception&) {
        }
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

// Applies fn to every item on up to `workers` threads; results keep the input
// order. The first exception thrown by fn is rethrown after all threads join.
template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, Fn fn, int workers)
{
    using R = decltype(fn(items.front()));
    std::vector<R> out(items.size());
    const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(std::max(1, workers)), items.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i)
            out[i] = fn(items[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < items.size();) {
            try {
                out[i] = fn(items[i]);
            } catch (...) {
                std::lock_guard lock(error_mu);
                if (!error)
                    error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back(work);
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
    return out;
}

} // namespace symchern
