#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace contact_spectra {

// Worker cap for sweeps: CONTACT_SPECTRA_THREADS when set, hardware
// concurrency otherwise.
inline unsigned thread_cap() {
    if (const char* env = std::getenv("CONTACT_SPECTRA_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Runs fn(i) for i in [0, count) on up to thread_cap() workers.  The first
// exception, if any, is rethrown on the caller.
inline void parallel_for(size_t count, const std::function<void(size_t)>& fn) {
    unsigned workers = std::min<size_t>(thread_cap(), count ? count : 1);
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    std::atomic<size_t> next{0};
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (size_t i = next++; i < count; i = next++) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace contact_spectra
