#ifndef VIRLIKE_PARALLEL_HPP
#define VIRLIKE_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace virlike {

/// Worker count: the VIRLIKE_THREADS environment variable when set to a
/// positive integer, otherwise the hardware concurrency (at least 1).
int worker_count();

/// Evaluates fn(chunk) for chunk in [0, n_chunks) on a worker pool and
/// concatenates the returned vectors in chunk order. The result does not
/// depend on the number of workers.
template <class T, class Fn>
std::vector<T> parallel_collect(std::size_t n_chunks, Fn&& fn) {
    const int workers = worker_count();
    std::vector<std::vector<T>> partial(n_chunks);
    if (workers <= 1 || n_chunks <= 1) {
        for (std::size_t i = 0; i < n_chunks; ++i) partial[i] = fn(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::atomic<bool> failed{false};
        auto work = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n_chunks || failed.load()) return;
                try {
                    partial[i] = fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) error = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        const int spawn = static_cast<int>(std::min<std::size_t>(workers, n_chunks));
        pool.reserve(spawn);
        for (int w = 0; w < spawn; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
        if (failed.load()) std::rethrow_exception(error);
    }
    std::vector<T> out;
    std::size_t total = 0;
    for (const auto& p : partial) total += p.size();
    out.reserve(total);
    for (auto& p : partial)
        for (auto& v : p) out.push_back(std::move(v));
    return out;
}

}  // namespace virlike

#endif
