// Copyright (c) 2026 the depthlab authors
// SPDX-License-Identifier: Apache-2.0

// NEON kernels, two doubles per lane group. Same ordering contract as the
// AVX2 variants: explicit mul/add across coordinates, no fused multiply-add.

#if defined(__aarch64__)

#include <arm_neon.h>

#include "depthlab/kernels.hpp"

namespace depthlab::kernels::detail {

namespace {

inline std::size_t count_mask(uint64x2_t m) {
    return (vgetq_lane_u64(m, 0) ? 1u : 0u) + (vgetq_lane_u64(m, 1) ? 1u : 0u);
}

}  // namespace

std::size_t count_nonneg_2d_neon(const double* xs, const double* ys, std::size_t n, double ux,
                                 double uy) {
    const float64x2_t vux = vdupq_n_f64(ux);
    const float64x2_t vuy = vdupq_n_f64(uy);
    const float64x2_t zero = vdupq_n_f64(0.0);
    std::size_t c = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t px = vmulq_f64(vux, vld1q_f64(xs + i));
        float64x2_t proj = vaddq_f64(px, vmulq_f64(vuy, vld1q_f64(ys + i)));
        c += count_mask(vcgeq_f64(proj, zero));
    }
    for (; i < n; ++i) {
        double proj = ux * xs[i] + uy * ys[i];
        if (proj >= 0.0) ++c;
    }
    return c;
}

std::size_t count_nonneg_nd_neon(const double* const* coords, std::size_t d, std::size_t n,
                                 const double* u) {
    const float64x2_t zero = vdupq_n_f64(0.0);
    std::size_t c = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t proj = vmulq_f64(vdupq_n_f64(u[0]), vld1q_f64(coords[0] + i));
        for (std::size_t j = 1; j < d; ++j) {
            float64x2_t term = vmulq_f64(vdupq_n_f64(u[j]), vld1q_f64(coords[j] + i));
            proj = vaddq_f64(proj, term);
        }
        c += count_mask(vcgeq_f64(proj, zero));
    }
    for (; i < n; ++i) {
        double proj = u[0] * coords[0][i];
        for (std::size_t j = 1; j < d; ++j) proj += u[j] * coords[j][i];
        if (proj >= 0.0) ++c;
    }
    return c;
}

std::size_t count_within_r2_neon(const double* const* coords, std::size_t d, std::size_t n,
                                 const double* center, double r2) {
    const float64x2_t vr2 = vdupq_n_f64(r2);
    std::size_t c = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t t0 = vsubq_f64(vld1q_f64(coords[0] + i), vdupq_n_f64(center[0]));
        float64x2_t acc = vmulq_f64(t0, t0);
        for (std::size_t j = 1; j < d; ++j) {
            float64x2_t t = vsubq_f64(vld1q_f64(coords[j] + i), vdupq_n_f64(center[j]));
            acc = vaddq_f64(acc, vmulq_f64(t, t));
        }
        c += count_mask(vcleq_f64(acc, vr2));
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

#endif  // aarch64
