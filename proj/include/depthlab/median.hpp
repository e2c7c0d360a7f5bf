// Copyright (c) 2026 the depthlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "depthlab/depth.hpp"

namespace depthlab {

/// Search hyperparameters for the half-space median (CLI-overridable).
struct MedianOptions {
    std::size_t refine_rounds = 200;  ///< seeded perturbation rounds
    double shrink = 0.9;              ///< geometric radius decay per round
    std::size_t approx_dirs = 1000;   ///< directions when no exact method applies
};

/// Result of the half-space median search. The returned depth is a certified
/// value of the returned point (exact whenever an exact method applies), so
/// it is a lower bound on the maximal depth of the sample.
struct MedianResult {
    Point point;
    DepthResult depth;
    std::uint64_t candidates_evaluated = 0;
};

/// Deepest-point search: evaluates every data point plus the coordinatewise
/// median and the mean, then locally refines the best candidate with seeded
/// Gaussian perturbations whose radius starts at the per-coordinate IQR and
/// shrinks geometrically. Deterministic given (data, seed, options).
MedianResult tukey_median(const Dataset& data, std::uint64_t seed,
                          const MedianOptions& options = {});

/// The maximal depth found by tukey_median (the sample's Delta_n).
DepthResult max_depth(const Dataset& data, std::uint64_t seed, const MedianOptions& options = {});

/// Per-coordinate sample median (average of middle order statistics for even n).
Point coordinatewise_median(const Dataset& data);

}  // namespace depthlab
