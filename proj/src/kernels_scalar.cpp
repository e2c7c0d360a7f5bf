// Copyright (c) 2026 the depthlab authors
// SPDX-License-Identifier: Apache-2.0

// Scalar reference kernels. This translation unit is compiled with
// -ffp-contract=off so the multiply-add sequences round exactly like the
// explicit mul/add intrinsics in the SIMD variants.

#include "depthlab/kernels.hpp"

namespace depthlab::kernels::detail {

std::size_t count_nonneg_2d_scalar(const double* xs, const double* ys, std::size_t n, double ux,
                                   double uy) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double proj = ux * xs[i] + uy * ys[i];
        if (proj >= 0.0) ++c;
    }
    return c;
}

std::size_t count_nonneg_nd_scalar(const double* const* coords, std::size_t d, std::size_t n,
                                   const double* u) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double proj = u[0] * coords[0][i];
        for (std::size_t j = 1; j < d; ++j) proj += u[j] * coords[j][i];
        if (proj >= 0.0) ++c;
    }
    return c;
}

std::size_t count_within_r2_scalar(const double* const* coords, std::size_t d, std::size_t n,
                                   const double* center, double r2) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) {
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
