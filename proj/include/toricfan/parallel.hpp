#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace toricfan {

/// Apply f to 0..count-1 on up to `jobs` threads; results are returned in
/// index order, so output is identical to a serial run.
template <class R, class F>
std::vector<R> parallel_map(size_t count, int jobs, F f) {
    std::vector<R> out(count);
    if (jobs <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) out[i] = f(i);
        return out;
    }
    size_t workers = std::min<size_t>(static_cast<size_t>(jobs), count);
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_lock;
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    out[i] = f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> guard(error_lock);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace toricfan
