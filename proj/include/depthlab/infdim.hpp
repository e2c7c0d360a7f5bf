// Copyright (c) 2026 the depthlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "depthlab/errors.hpp"

namespace depthlab {

/// Gaussian sequence model on l2: independent coordinates X_i ~ N(0, sigma_i^2)
/// with a summable variance profile.
struct SequenceModel {
    enum class Profile { inverse_square, geometric, custom };
    Profile profile = Profile::inverse_square;
    std::vector<double> custom_sigma2;

    static SequenceModel inverse_square();  ///< sigma_i^2 = i^-2
    static SequenceModel geometric();       ///< sigma_i^2 = 2^-i
    static SequenceModel custom(std::vector<double> sigma2);

    /// Variance of coordinate i (1-based). Throws DomainError when a custom
    /// profile is shorter than i.
    double sigma2(std::size_t i) const;
};

/// Chebyshev depth bound min(1, 1/sum_{i<=d} x_i^2/sigma_i^2); `raw` is the
/// unclipped value (infinity when the sum is zero, i.e. the bound is vacuous).
struct BoundResult {
    double bound = 1.0;
    double raw = 0.0;
    bool clipped = false;
};

BoundResult depth_upper_bound(const SequenceModel& model, const std::vector<double>& x,
                              std::size_t d_trunc);

/// Oracle for the Cauchy-Schwarz optimum: draws n_random_alpha random
/// truncated directions and checks that every Chebyshev ratio
/// sum a_i^2 s_i^2 / (sum a_i x_i)^2 stays above the closed-form bound
/// (within 1e-10 slack). Degenerate draws with sum a_i x_i == 0 are redrawn.
bool verify_optimal_alpha(const SequenceModel& model, const std::vector<double>& x,
                          std::size_t d_trunc, std::size_t n_random_alpha, std::uint64_t seed);

/// One truncated draw from the model.
std::vector<double> sample_sequence(const SequenceModel& model, std::size_t d_max,
                                    std::uint64_t seed, std::uint64_t draw_index);

/// Depth-bound decay across truncation dimensions for seeded model draws.
struct DecayTable {
    std::vector<std::size_t> d_grid;
    std::vector<std::vector<double>> bounds;  ///< [draw][d_index], clipped
    std::vector<double> median_bound;         ///< per d
    std::vector<double> max_bound;            ///< per d
};

DecayTable decay_experiment(const SequenceModel& model, std::size_t n_draws,
                            const std::vector<std::size_t>& d_grid, std::uint64_t seed);

}  // namespace depthlab
