#ifndef PFCI_PARALLEL_HPP
#define PFCI_PARALLEL_HPP

#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace pfci {

// Resolve a thread-count request: 0 means "PFCI_THREADS env var, else 1".
inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("PFCI_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    return 1;
}

// Runs fn(i) for i in [0, count) on up to num_threads workers. Tasks map to
// workers by static striding, so each index always writes its own slot and
// results are independent of the thread count. The first exception thrown by
// any worker is rethrown.
inline void parallel_for(int count, int num_threads, const std::function<void(int)>& fn) {
    num_threads = std::min(resolve_threads(num_threads), std::max(count, 1));
    if (num_threads <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::exception_ptr> errors(num_threads);
    std::vector<std::thread> workers;
    workers.reserve(num_threads);
    for (int t = 0; t < num_threads; ++t) {
        workers.emplace_back([&, t]() {
            try {
                for (int i = t; i < count; i += num_threads) fn(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace pfci

#endif
