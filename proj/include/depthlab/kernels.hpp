// Copyright (c) 2026 the depthlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

namespace depthlab::kernels {

// Data-parallel inner loops shared by the depth routines. Each kernel has a
// scalar reference implementation and SIMD variants (AVX2 on x86-64, NEON on
// aarch64) selected once at startup. All variants perform the per-point
// arithmetic in the same order (multiply then add, no FMA contraction), so
// their results are bit-identical to the scalar reference; the equivalence
// tests assert exact equality, not a tolerance.

/// #{i : ux*xs[i] + uy*ys[i] >= 0}
std::size_t count_nonneg_2d(const double* xs, const double* ys, std::size_t n, double ux, double uy);

/// #{i : sum_j u[j]*coords[j][i] >= 0}; coords is coordinate-major, d >= 1.
std::size_t count_nonneg_nd(const double* const* coords, std::size_t d, std::size_t n,
                            const double* u);

/// #{i : sum_j (coords[j][i]-center[j])^2 <= r2}
std::size_t count_within_r2(const double* const* coords, std::size_t d, std::size_t n,
                            const double* center, double r2);

/// Name of the variant currently dispatched: "scalar", "avx2" or "neon".
const char* active_backend();

/// Test hook: route every kernel through the scalar reference.
void force_scalar(bool on);

namespace detail {
// Reference implementations (always compiled; SIMD variants are checked
// against these).
std::size_t count_nonneg_2d_scalar(const double* xs, const double* ys, std::size_t n, double ux,
                                   double uy);
std::size_t count_nonneg_nd_scalar(const double* const* coords, std::size_t d, std::size_t n,
                                   const double* u);
std::size_t count_within_r2_scalar(const double* const* coords, std::size_t d, std::size_t n,
                                   const double* center, double r2);

#if defined(__x86_64__) || defined(_M_X64)
std::size_t count_nonneg_2d_avx2(const double* xs, const double* ys, std::size_t n, double ux,
                                 double uy);
std::size_t count_nonneg_nd_avx2(const double* const* coords, std::size_t d, std::size_t n,
                                 const double* u);
std::size_t count_within_r2_avx2(const double* const* coords, std::size_t d, std::size_t n,
                                 const double* center, double r2);
#endif

#if defined(__aarch64__)
std::size_t count_nonneg_2d_neon(const double* xs, const double* ys, std::size_t n, double ux,
                                 double uy);
std::size_t count_nonneg_nd_neon(const double* const* coords, std::size_t d, std::size_t n,
                                 const double* u);
std::size_t count_within_r2_neon(const double* const* coords, std::size_t d, std::size_t n,
                                 const double* center, double r2);
#endif
}  // namespace detail

}  // namespace depthlab::kernels
