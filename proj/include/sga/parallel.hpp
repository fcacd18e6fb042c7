#ifndef SGA_PARALLEL_HPP
#define SGA_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace sga {

// Deterministic parallel map: results are written by index into a pre-sized
// buffer, so the outcome is independent of the number of worker threads.
// thread_count() is the process-wide default, settable from the CLI.

inline int& thread_count_ref() {
    static int n = (int)std::thread::hardware_concurrency();
    return n;
}

inline int thread_count() { return thread_count_ref() > 0 ? thread_count_ref() : 1; }
inline void set_thread_count(int n) { thread_count_ref() = n > 0 ? n : 1; }

template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    int workers = thread_count();
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::atomic<bool> failed{false};
    auto work = [&] {
        std::size_t i;
        while ((i = next.fetch_add(1)) < count) {
            if (failed.load()) return;
            try {
                fn(i);
            } catch (...) {
                if (!failed.exchange(true)) err = std::current_exception();
                return;
            }
        }
    };
    int spawn = workers < (int)count ? workers : (int)count;
    pool.reserve(spawn);
    for (int t = 0; t < spawn; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (failed.load() && err) std::rethrow_exception(err);
}

template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, Fn&& fn) {
    std::vector<T> out(count);
    parallel_for(count, [&](std::size_t i) { out[i] = fn(i); });
    return out;
}

} // namespace sga

#endif
