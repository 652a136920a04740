#ifndef CHIVAR_PARALLEL_HPP
#define CHIVAR_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace chivar {

// Runs fn(0..count-1) across worker threads.  Each index owns its output
// slot, so results are identical for any worker count.  max_threads <= 0
// picks the hardware default (capped at 16).
inline void parallel_for_index(std::size_t count, const std::function<void(std::size_t)>& fn,
                               int max_threads = 0) {
    unsigned hw = std::thread::hardware_concurrency();
    unsigned workers = max_threads > 0 ? static_cast<unsigned>(max_threads)
                                       : std::min(hw == 0 ? 1u : hw, 16u);
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    workers = std::min<unsigned>(workers, static_cast<unsigned>(count));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= count || failed.load()) return;
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failed.load() && error) std::rethrow_exception(error);
}

} // namespace chivar

#endif
