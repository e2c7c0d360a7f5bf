// Copyright (c) 2026 the depthlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "depthlab/dataset.hpp"

namespace depthlab {

enum class DepthMethod { exact1d, exact2d, exact_combinatorial, approx };

std::string to_string(DepthMethod m);

/// Empirical half-space depth of a query point. Half-spaces are closed, so
/// exact values are rationals count/n; `count` is the minimal number of data
/// points in a closed half-space whose boundary passes through the query.
struct DepthResult {
    double value = 0.0;
    std::uint64_t count = 0;
    std::uint64_t n = 0;
    DepthMethod method = DepthMethod::exact1d;
    /// Unit direction u whose closed half-space {y : <u, y-x> >= 0} attains
    /// the minimum. Not reported for the univariate method.
    std::optional<Point> witness;
};

/// Univariate depth: min(#{xi <= x}, #{xi >= x}) / n.
DepthResult depth_1d(const Dataset& data, double x);

/// Exact bivariate depth by an O(n log n) angular sweep. Events at the same
/// angle (duplicates, antipodal pairs) are processed atomically; points
/// coincident with the query count in every closed half-plane.
DepthResult depth_2d_exact(const Dataset& data, const Point& x);

/// Exact depth for 1 <= d <= 4, n <= 60, by enumeration of candidate normals
/// orthogonal to (d-1)-subsets of centered data points, with boundary ties
/// resolved recursively one dimension down.
DepthResult depth_exact_combinatorial(const Dataset& data, const Point& x);

/// Upper estimate: minimum closed-half-space fraction over n_dirs random unit
/// directions (Gaussian-normalized, substreamed per direction index so
/// direction sets are nested across n_dirs). Always >= the exact depth.
DepthResult depth_approx(const Dataset& data, const Point& x, std::size_t n_dirs,
                         std::uint64_t seed);

/// depth_2d_exact evaluated at every grid node, row-major (iy outer, ix inner).
std::vector<double> depth_grid(const Dataset& data, const GridSpec& grid);

/// Maximum problem size accepted by depth_exact_combinatorial.
inline constexpr std::size_t kCombinatorialMaxDim = 4;
inline constexpr std::size_t kCombinatorialMaxN = 60;

/// Exact depth when an exact algorithm applies (d <= 2 at any n; d <= 4 with
/// n <= 60), otherwise std::nullopt.
std::optional<DepthResult> depth_exact_auto(const Dataset& data, const Point& x);

}  // namespace depthlab
