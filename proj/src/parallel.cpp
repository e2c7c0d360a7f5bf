// Copyright (c) 2026 the depthlab authors
// SPDX-License-Identifier: Apache-2.0

#include "depthlab/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace depthlab {

namespace {
std::atomic<unsigned> g_max_threads{0};
thread_local bool t_inside_worker = false;
}

void set_max_threads(unsigned n) { g_max_threads.store(n); }

unsigned max_threads() {
    unsigned n = g_max_threads.load();
    if (n == 0) n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)>& body) {
    if (begin >= end) return;
    const std::size_t total = end - begin;
    unsigned workers = max_threads();
    if (workers > total) workers = static_cast<unsigned>(total);
    // Nested calls run inline: the outer loop already owns the workers.
    if (workers <= 1 || t_inside_worker) {
        for (std::size_t i = begin; i < end; ++i) body(i);
        return;
    }

    // Dynamic chunking keeps uneven work balanced; determinism comes from the
    // body's slot-writing contract, not from scheduling.
    std::atomic<std::size_t> next{begin};
    std::exception_ptr first_error;
    std::mutex error_mu;
    auto worker = [&]() {
        t_inside_worker = true;
        try {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= end) return;
                body(i);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mu);
            if (!first_error) first_error = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace depthlab
