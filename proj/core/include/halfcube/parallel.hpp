#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <type_traits>
#include <vector>

namespace halfcube {

/// Evaluates fn(0..count-1) on up to `threads` workers. Results come back in
/// index order regardless of scheduling, so output stays deterministic. The
/// first exception thrown by any worker is rethrown.
template <typename F>
auto parallel_map(std::size_t count, int threads, F&& fn) {
    using R = std::invoke_result_t<F&, std::size_t>;
    std::vector<R> results(count);
    const std::size_t workers = std::clamp<std::size_t>(threads <= 0 ? 1 : threads, 1, std::max<std::size_t>(count, 1));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
        return results;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers) results[i] = fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return results;
}

}  // namespace halfcube
