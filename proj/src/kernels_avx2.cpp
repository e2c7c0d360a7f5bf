// Copyright (c) 2026 the depthlab authors
// SPDX-License-Identifier: Apache-2.0

// AVX2 kernels, four doubles per lane group. Vectorization is across points;
// within a point the coordinate terms are accumulated in the same order as
// the scalar reference, using explicit mul/add (never FMA), so every
// projection is bit-identical to the scalar path and the sign counts agree
// exactly.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "depthlab/kernels.hpp"

namespace depthlab::kernels::detail {

namespace {

inline std::size_t popcount_mask(int m) { return static_cast<std::size_t>(__builtin_popcount(m)); }

}  // namespace

std::size_t count_nonneg_2d_avx2(const double* xs, const double* ys, std::size_t n, double ux,
                                 double uy) {
    const __m256d vux = _mm256_set1_pd(ux);
    const __m256d vuy = _mm256_set1_pd(uy);
    const __m256d zero = _mm256_setzero_pd();
    std::size_t c = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d px = _mm256_mul_pd(vux, _mm256_loadu_pd(xs + i));
        __m256d proj = _mm256_add_pd(px, _mm256_mul_pd(vuy, _mm256_loadu_pd(ys + i)));
        int mask = _mm256_movemask_pd(_mm256_cmp_pd(proj, zero, _CMP_GE_OQ));
        c += popcount_mask(mask);
    }
    for (; i < n; ++i) {
        double proj = ux * xs[i] + uy * ys[i];
        if (proj >= 0.0) ++c;
    }
    return c;
}

std::size_t count_nonneg_nd_avx2(const double* const* coords, std::size_t d, std::size_t n,
                                 const double* u) {
    const __m256d zero = _mm256_setzero_pd();
    std::size_t c = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d proj = _mm256_mul_pd(_mm256_set1_pd(u[0]), _mm256_loadu_pd(coords[0] + i));
        for (std::size_t j = 1; j < d; ++j) {
            __m256d term = _mm256_mul_pd(_mm256_set1_pd(u[j]), _mm256_loadu_pd(coords[j] + i));
            proj = _mm256_add_pd(proj, term);
        }
        int mask = _mm256_movemask_pd(_mm256_cmp_pd(proj, zero, _CMP_GE_OQ));
        c += popcount_mask(mask);
    }
    for (; i < n; ++i) {
        double proj = u[0] * coords[0][i];
        for (std::size_t j = 1; j < d; ++j) proj += u[j] * coords[j][i];
        if (proj >= 0.0) ++c;
    }
    return c;
}

std::size_t count_within_r2_avx2(const double* const* coords, std::size_t d, std::size_t n,
                                 const double* center, double r2) {
    const __m256d vr2 = _mm256_set1_pd(r2);
    std::size_t c = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d t0 = _mm256_sub_pd(_mm256_loadu_pd(coords[0] + i), _mm256_set1_pd(center[0]));
        __m256d acc = _mm256_mul_pd(t0, t0);
        for (std::size_t j = 1; j < d; ++j) {
            __m256d t = _mm256_sub_pd(_mm256_loadu_pd(coords[j] + i), _mm256_set1_pd(center[j]));
            acc = _mm256_add_pd(acc, _mm256_mul_pd(t, t));
        }
        int mask = _mm256_movemask_pd(_mm256_cmp_pd(acc, vr2, _CMP_LE_OQ));
        c += popcount_mask(mask);
    }
    for (; i < n; ++i) {
        double t0 = coords[0][i] - center[0];
        double acc = t0 * t0;
        for (std::size_t j = 1; j < d; ++j) {
            double t = coords[j][i] - center[j];
            acc += t * t;
        }
        if (acc <= r2) ++c;
    }
    return c;
}

}  // namespace depthlab::kernels::detail

#endif  // x86-64
