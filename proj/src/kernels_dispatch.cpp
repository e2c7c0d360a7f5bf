// Copyright (c) 2026 the depthlab authors
// SPDX-License-Identifier: Apache-2.0

// Runtime selection of the kernel variants. The dispatch pointers are
// resolved once at static-initialization time from the host CPU; force_scalar
// lets the tests pin the reference path and compare.

#include <atomic>

#include "depthlab/kernels.hpp"

namespace depthlab::kernels {

namespace {

using Fn2d = std::size_t (*)(const double*, const double*, std::size_t, double, double);
using FnNd = std::size_t (*)(const double* const*, std::size_t, std::size_t, const double*);
using FnR2 = std::size_t (*)(const double* const*, std::size_t, std::size_t, const double*, double);

struct Table {
    Fn2d nonneg_2d;
    FnNd nonneg_nd;
    FnR2 within_r2;
    const char* name;
};

constexpr Table kScalar{detail::count_nonneg_2d_scalar, detail::count_nonneg_nd_scalar,
                        detail::count_within_r2_scalar, "scalar"};

Table detect() {
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2"))
        return {detail::count_nonneg_2d_avx2, detail::count_nonneg_nd_avx2,
                detail::count_within_r2_avx2, "avx2"};
#endif
#if defined(__aarch64__)
    return {detail::count_nonneg_2d_neon, detail::count_nonneg_nd_neon,
            detail::count_within_r2_neon, "neon"};
#endif
    return kScalar;
}

const Table g_native = detect();
std::atomic<bool> g_force_scalar{false};

inline const Table& table() { return g_force_scalar.load(std::memory_order_relaxed) ? kScalar : g_native; }

}  // namespace

std::size_t count_nonneg_2d(const double* xs, const double* ys, std::size_t n, double ux,
                            double uy) {
    return table().nonneg_2d(xs, ys, n, ux, uy);
}

std::size_t count_nonneg_nd(const double* const* coords, std::size_t d, std::size_t n,
                            const double* u) {
    return table().nonneg_nd(coords, d, n, u);
}

std::size_t count_within_r2(const double* const* coords, std::size_t d, std::size_t n,
                            const double* center, double r2) {
    return table().within_r2(coords, d, n, center, r2);
}

const char* active_backend() { return table().name; }

void force_scalar(bool on) { g_force_scalar.store(on, std::memory_order_relaxed); }

}  // namespace depthlab::kernels
