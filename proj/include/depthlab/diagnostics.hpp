// Copyright (c) 2026 the depthlab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "depthlab/depth.hpp"

namespace depthlab {

/// How point depths are computed when ranking a sample: exact whenever an
/// exact method applies (d <= 2, or d <= 4 with n <= 60), otherwise by
/// depth_approx with this many directions and seed.
struct DepthPolicy {
    std::size_t approx_dirs = 1000;
    std::uint64_t seed = 0;
};

/// Indices of the data points ordered deepest-first; depth ties broken by
/// dataset index.
std::vector<std::size_t> depth_ordering(const Dataset& data, const DepthPolicy& policy = {});

/// The ceil(q*n) deepest sample points (the "q-th central hull" vertex set;
/// the enclosing ball of the set equals that of its hull, so no hull
/// extraction is needed).
std::vector<Point> central_hull(const Dataset& data, double q, const DepthPolicy& policy = {});

struct Ball {
    Point center;
    double radius = 0.0;
};

/// Smallest enclosing Euclidean ball (Welzl's move-to-front algorithm),
/// d <= 4. Radius is exact to ~1e-9 relative.
Ball smallest_enclosing_ball(const std::vector<Point>& points);

/// The r(q) sphericity diagnostic: fraction of the data inside the smallest
/// ball S_q around the q-th central hull, against q, plus the trapezoidal
/// area between the curve and the diagonal.
struct SphericityCurve {
    std::vector<double> q_grid;
    std::vector<double> r_values;
    double area_deviation = 0.0;
};

SphericityCurve sphericity_curve(const Dataset& data, const std::vector<double>& q_grid,
                                 const DepthPolicy& policy = {});

}  // namespace depthlab
